#ifndef FUZZYREG_REGULATOR_HPP
#define FUZZYREG_REGULATOR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzyreg/inference.hpp"
#include "fuzzyreg/membership.hpp"

namespace fuzzyreg {

enum class DefuzzPolicy { CenterOfGravity };

/// What evaluate does when no rule fires.
enum class ZeroMassPolicy { Error, Midpoint };

enum class Execution { Serial, Parallel };

/// Every intermediate stage of one fuzzify -> infer -> defuzzify pass.
struct EvalTrace {
    double input;
    double clamped_input;
    std::vector<double> activations;
    FuzzySet aggregated;
    double output;
    bool fallback = false; ///< true when output is the midpoint substitute
};

struct SweepPoint {
    double input;
    double output;
    bool fallback = false;

    bool operator==(const SweepPoint&) const = default;
};

/// Single-input single-output Mamdani regulator. Immutable; the consequent
/// sets are discretized once at construction.
class Regulator {
public:
    /// output_resolution defaults to the output universe's own sample count.
    explicit Regulator(RuleBase rulebase, std::optional<std::size_t> output_resolution = std::nullopt,
                       DefuzzPolicy defuzz = DefuzzPolicy::CenterOfGravity,
                       ZeroMassPolicy zero_mass = ZeroMassPolicy::Error);

    const RuleBase& rulebase() const noexcept { return rulebase_; }
    std::size_t output_resolution() const noexcept { return output_universe_.size(); }
    DefuzzPolicy defuzz_policy() const noexcept { return defuzz_; }
    ZeroMassPolicy zero_mass_policy() const noexcept { return zero_mass_; }

    /// Universe the consequents are discretized on.
    const Universe& output_universe() const noexcept { return output_universe_; }
    const std::vector<FuzzySet>& consequents() const noexcept { return consequents_; }

    /// Copy with a different zero-mass policy.
    Regulator with_zero_mass_policy(ZeroMassPolicy policy) const;

    bool operator==(const Regulator& other) const;

private:
    RuleBase rulebase_;
    Universe output_universe_;
    DefuzzPolicy defuzz_;
    ZeroMassPolicy zero_mass_;
    std::vector<FuzzySet> consequents_;
};

/// Throws Error(NonFiniteInput) for non-finite x0 and Error(ZeroMass) when no
/// rule fires under ZeroMassPolicy::Error.
EvalTrace evaluate(const Regulator& reg, double x0);

/// Evaluates `steps` evenly spaced inputs across the input universe, in
/// ascending order. Errors are rethrown with the offending input prepended.
std::vector<SweepPoint> sweep(const Regulator& reg, std::size_t steps,
                              Execution exec = Execution::Parallel);

/// The built-in five-term temperature controller: input "Temperature" on
/// [0, 100], output "Command" on [0, 1], both uniform 101-point partitions,
/// with rules TFJ->CVB, TJ->CB, TM->CM, TI->CS, TFI->CVS.
Regulator reference_regulator();

} // namespace fuzzyreg

#endif

#include "fuzzyreg/regulator.hpp"

#include <exception>
#include <optional>
#include <sstream>

#include "fuzzyreg/defuzz.hpp"
#include "fuzzyreg/error.hpp"

namespace fuzzyreg {

namespace {

std::vector<FuzzySet> discretize_terms(const LinguisticVariable& var, const Universe& u) {
    std::vector<FuzzySet> sets;
    sets.reserve(var.term_count());
    for (const auto& term : var.terms()) sets.push_back(discretize(term.mf, u));
    return sets;
}

Universe resolve_output_universe(const LinguisticVariable& output, std::optional<std::size_t> resolution) {
    const Universe& u = output.universe();
    if (!resolution) return u;
    if (*resolution < 2) throw Error(ErrorKind::InvalidArgument, "output resolution must be at least 2");
    return Universe(u.min(), u.max(), *resolution);
}

LinguisticVariable five_term_partition(std::string name, double lo, double hi, std::vector<std::string> labels) {
    const double q = (hi - lo) / 4.0;
    const double p0 = lo, p1 = lo + q, p2 = lo + 2.0 * q, p3 = lo + 3.0 * q, p4 = hi;
    std::vector<LinguisticTerm> terms{
        {labels[0], MembershipFunction(ZShoulder{p0, p1})},
        {labels[1], MembershipFunction(Triangular{p0, p1, p2})},
        {labels[2], MembershipFunction(Triangular{p1, p2, p3})},
        {labels[3], MembershipFunction(Triangular{p2, p3, p4})},
        {labels[4], MembershipFunction(SShoulder{p3, p4})},
    };
    return LinguisticVariable(std::move(name), Universe(lo, hi, 101), std::move(terms));
}

} // namespace

Regulator::Regulator(RuleBase rulebase, std::optional<std::size_t> output_resolution, DefuzzPolicy defuzz,
                     ZeroMassPolicy zero_mass)
    : rulebase_(std::move(rulebase)),
      output_universe_(resolve_output_universe(rulebase_.output(), output_resolution)),
      defuzz_(defuzz),
      zero_mass_(zero_mass),
      consequents_(discretize_terms(rulebase_.output(), output_universe_)) {}

Regulator Regulator::with_zero_mass_policy(ZeroMassPolicy policy) const {
    Regulator copy = *this;
    copy.zero_mass_ = policy;
    return copy;
}

bool Regulator::operator==(const Regulator& other) const {
    return rulebase_ == other.rulebase_ && output_universe_ == other.output_universe_ &&
           defuzz_ == other.defuzz_ && zero_mass_ == other.zero_mass_;
}

EvalTrace evaluate(const Regulator& reg, double x0) {
    const auto& input = reg.rulebase().input();
    auto activations = singleton_fuzzify(x0, input);
    FuzzySet aggregated = infer(reg.rulebase(), activations, reg.consequents());

    EvalTrace trace{x0, input.universe().clamp(x0), std::move(activations), std::move(aggregated), 0.0, false};
    try {
        trace.output = defuzz_cog(trace.aggregated);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroMass || reg.zero_mass_policy() != ZeroMassPolicy::Midpoint) throw;
        trace.output = reg.output_universe().midpoint();
        trace.fallback = true;
    }
    return trace;
}

std::vector<SweepPoint> sweep(const Regulator& reg, std::size_t steps, Execution exec) {
    if (steps < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs at least 2 steps");
    const Universe grid(reg.rulebase().input().universe().min(), reg.rulebase().input().universe().max(), steps);

    std::vector<SweepPoint> result(steps);
    std::vector<std::exception_ptr> failures(steps);
    const auto n = static_cast<std::ptrdiff_t>(steps);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel && steps >= 64)
    for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        try {
            const EvalTrace t = evaluate(reg, grid[i]);
            result[i] = SweepPoint{grid[i], t.output, t.fallback};
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }

    for (std::size_t i = 0; i < steps; ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "at input " << grid[i] << ": " << e.what();
            throw Error(e.kind(), msg.str(), e.path());
        }
    }
    return result;
}

Regulator reference_regulator() {
    auto temperature = five_term_partition("Temperature", 0.0, 100.0, {"TFJ", "TJ", "TM", "TI", "TFI"});
    auto command = five_term_partition("Command", 0.0, 1.0, {"CVS", "CS", "CM", "CB", "CVB"});
    // Colder input calls for a larger command: TFJ->CVB ... TFI->CVS.
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < 5; ++i) rules.push_back(Rule{i, 4 - i});
    return Regulator(RuleBase(std::move(temperature), std::move(command), std::move(rules)));
}

} // namespace fuzzyreg

#ifndef FUZZYREG_INFERENCE_HPP
#define FUZZYREG_INFERENCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzyreg/membership.hpp"

namespace fuzzyreg {

/// Dense m x n matrix of grades, row-major. Rows index the input universe,
/// columns the output universe.
class FuzzyRelation {
public:
    /// Throws Error(DimensionMismatch) unless entries.size() == rows * cols
    /// with rows, cols >= 1; Error(InvalidArgument) for grades outside [0, 1].
    FuzzyRelation(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const double> entries() const noexcept { return entries_; }
    std::span<const double> row(std::size_t i) const { return std::span(entries_).subspan(i * cols_, cols_); }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const FuzzyRelation&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Mamdani implication: R[i][j] = min(a[i], b[j]).
FuzzyRelation build_relation(std::span<const double> a, std::span<const double> b);
FuzzyRelation build_relation(const FuzzySet& a, const FuzzySet& b);

/// Max-min composition of `ap` through `r`. Throws Error(DimensionMismatch)
/// when ap.size() != r.rows().
std::vector<double> compose(const FuzzyRelation& r, std::span<const double> ap);

/// Compositional rule of inference; the result is placed on `output`, which
/// must have r.cols() points.
FuzzySet cri(const FuzzyRelation& r, const FuzzySet& ap, const Universe& output);

/// Elementwise max. Both operands must share a universe.
FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);

/// Elementwise min of every grade with `level`.
FuzzySet clip(const FuzzySet& set, double level);

struct Rule {
    std::size_t antecedent; ///< index into the input variable's terms
    std::size_t consequent; ///< index into the output variable's terms

    bool operator==(const Rule&) const = default;
};

class RuleBase {
public:
    /// Throws Error(EmptyRuleBase) with no rules and Error(InvalidRuleBase) for
    /// out-of-range indices or two rules sharing an antecedent.
    RuleBase(LinguisticVariable input, LinguisticVariable output, std::vector<Rule> rules);

    const LinguisticVariable& input() const noexcept { return input_; }
    const LinguisticVariable& output() const noexcept { return output_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    bool operator==(const RuleBase&) const = default;

private:
    LinguisticVariable input_;
    LinguisticVariable output_;
    std::vector<Rule> rules_;
};

/// Clips each rule's consequent at its antecedent activation and max-unions
/// the results. `consequents[t]` is output term t discretized on the shared
/// output universe.
FuzzySet infer(const RuleBase& rb, std::span<const double> activations,
               std::span<const FuzzySet> consequents);

} // namespace fuzzyreg

#endif

#include "fuzzyreg/inference.hpp"

#include <algorithm>
#include <string>

#include "fuzzyreg/error.hpp"
#include "fuzzyreg/kernels.hpp"

namespace fuzzyreg {

namespace {

[[noreturn]] void mismatch(const std::string& what, std::size_t got, std::size_t want) {
    throw Error(ErrorKind::DimensionMismatch,
                what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
}

} // namespace

FuzzyRelation::FuzzyRelation(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::DimensionMismatch, "relation needs at least one row and column");
    if (entries_.size() != rows_ * cols_) mismatch("relation entries", entries_.size(), rows_ * cols_);
    for (double g : entries_) {
        if (!(g >= 0.0 && g <= 1.0)) throw Error(ErrorKind::InvalidArgument, "relation grade outside [0, 1]");
    }
}

FuzzyRelation build_relation(std::span<const double> a, std::span<const double> b) {
    std::vector<double> entries(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) entries[i * b.size() + j] = std::min(a[i], b[j]);
    }
    return FuzzyRelation(a.size(), b.size(), std::move(entries));
}

FuzzyRelation build_relation(const FuzzySet& a, const FuzzySet& b) {
    return build_relation(a.grades(), b.grades());
}

std::vector<double> compose(const FuzzyRelation& r, std::span<const double> ap) {
    if (ap.size() != r.rows()) mismatch("cri input length", ap.size(), r.rows());
    std::vector<double> out(r.cols());
    kernels::parallel::max_min_compose(r.entries(), r.cols(), ap, out);
    return out;
}

FuzzySet cri(const FuzzyRelation& r, const FuzzySet& ap, const Universe& output) {
    if (output.size() != r.cols()) mismatch("cri output universe", output.size(), r.cols());
    return FuzzySet(output, compose(r, ap.grades()));
}

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
    if (a.size() != b.size()) mismatch("union operand length", b.size(), a.size());
    if (a.universe() != b.universe()) throw Error(ErrorKind::DimensionMismatch, "union operands live on different universes");
    std::vector<double> out(a.size());
    std::transform(a.grades().begin(), a.grades().end(), b.grades().begin(), out.begin(),
                   [](double x, double y) { return std::max(x, y); });
    return FuzzySet(a.universe(), std::move(out));
}

FuzzySet clip(const FuzzySet& set, double level) {
    std::vector<double> out(set.size());
    std::transform(set.grades().begin(), set.grades().end(), out.begin(),
                   [level](double g) { return std::min(g, level); });
    return FuzzySet(set.universe(), std::move(out));
}

RuleBase::RuleBase(LinguisticVariable input, LinguisticVariable output, std::vector<Rule> rules)
    : input_(std::move(input)), output_(std::move(output)), rules_(std::move(rules)) {
    if (rules_.empty()) throw Error(ErrorKind::EmptyRuleBase, "rule base has no rules");
    std::vector<bool> used(input_.term_count(), false);
    for (const auto& rule : rules_) {
        if (rule.antecedent >= input_.term_count() || rule.consequent >= output_.term_count())
            throw Error(ErrorKind::InvalidRuleBase, "rule refers to a term index out of range");
        if (used[rule.antecedent])
            throw Error(ErrorKind::InvalidRuleBase,
                        "two rules share antecedent '" + input_.terms()[rule.antecedent].name + "'");
        used[rule.antecedent] = true;
    }
}

FuzzySet infer(const RuleBase& rb, std::span<const double> activations, std::span<const FuzzySet> consequents) {
    if (rb.rules().empty()) throw Error(ErrorKind::EmptyRuleBase, "rule base has no rules");
    if (activations.size() != rb.input().term_count())
        mismatch("activation count", activations.size(), rb.input().term_count());
    if (consequents.size() != rb.output().term_count())
        mismatch("consequent set count", consequents.size(), rb.output().term_count());
    const Universe& universe = consequents.front().universe();
    for (const auto& set : consequents) {
        if (set.universe() != universe)
            throw Error(ErrorKind::DimensionMismatch, "consequent sets live on different universes");
    }

    std::vector<double> levels;
    std::vector<std::span<const double>> sets;
    levels.reserve(rb.rules().size());
    sets.reserve(rb.rules().size());
    for (const auto& rule : rb.rules()) {
        levels.push_back(activations[rule.antecedent]);
        sets.push_back(consequents[rule.consequent].grades());
    }
    std::vector<double> out(universe.size());
    kernels::parallel::clip_union(levels, sets, out);
    return FuzzySet(universe, std::move(out));
}

} // namespace fuzzyreg

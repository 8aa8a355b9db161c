#include "fuzzyreg/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "fuzzyreg/error.hpp"

namespace fuzzyreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

// Rising edge from a (grade 0) to b (grade 1); a == b is a vertical edge.
double rising(double a, double b, double x) noexcept {
    if (x >= b) return 1.0;
    return (x - a) / (b - a);
}

double falling(double b, double c, double x) noexcept {
    if (x <= b) return 1.0;
    return (c - x) / (c - b);
}

struct Evaluator {
    double x;

    double operator()(const Triangular& t) const noexcept {
        if (x < t.a || x > t.c) return 0.0;
        return x <= t.b ? rising(t.a, t.b, x) : falling(t.b, t.c, x);
    }
    double operator()(const Trapezoidal& t) const noexcept {
        if (x < t.a || x > t.d) return 0.0;
        if (x < t.b) return rising(t.a, t.b, x);
        if (x <= t.c) return 1.0;
        return falling(t.c, t.d, x);
    }
    double operator()(const Gaussian& g) const noexcept {
        const double d = x - g.center;
        return std::exp(-(d * d) / (2.0 * g.sigma * g.sigma));
    }
    double operator()(const ZShoulder& z) const noexcept {
        if (x <= z.a) return 1.0;
        if (x >= z.b) return 0.0;
        return (z.b - x) / (z.b - z.a);
    }
    double operator()(const SShoulder& s) const noexcept {
        if (x <= s.a) return 0.0;
        if (x >= s.b) return 1.0;
        return (x - s.a) / (s.b - s.a);
    }
};

[[noreturn]] void bad_shape(const Shape& shape, const char* why) {
    std::ostringstream msg;
    msg << shape_name(shape) << " parameters";
    for (double p : shape_params(shape)) msg << ' ' << p;
    msg << ": " << why;
    throw Error(ErrorKind::InvalidMembership, msg.str());
}

void validate(const Shape& shape) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Triangular>) {
                if (!finite({s.a, s.b, s.c})) bad_shape(shape, "must be finite");
                if (!(s.a <= s.b && s.b <= s.c)) bad_shape(shape, "require a <= b <= c");
                if (!(s.a < s.c)) bad_shape(shape, "require a < c");
            } else if constexpr (std::is_same_v<T, Trapezoidal>) {
                if (!finite({s.a, s.b, s.c, s.d})) bad_shape(shape, "must be finite");
                if (!(s.a <= s.b && s.b <= s.c && s.c <= s.d)) bad_shape(shape, "require a <= b <= c <= d");
                if (!(s.a < s.d)) bad_shape(shape, "require a < d");
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                if (!finite({s.center, s.sigma})) bad_shape(shape, "must be finite");
                if (!(s.sigma > 0.0)) bad_shape(shape, "require sigma > 0");
            } else {
                if (!finite({s.a, s.b})) bad_shape(shape, "must be finite");
                if (!(s.a < s.b)) bad_shape(shape, "require a < b");
            }
        },
        shape);
}

} // namespace

Universe::Universe(double min, double max, std::size_t n) : min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max) || n < 2) {
        std::ostringstream msg;
        msg << "universe [" << min << ", " << max << "] with " << n
            << " points: require finite min < max and n >= 2";
        throw Error(ErrorKind::InvalidUniverse, msg.str());
    }
    points_.resize(n);
    const double step = (max - min) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) points_[i] = min + static_cast<double>(i) * step;
    points_[n - 1] = max;
}

double Universe::clamp(double x) const noexcept { return std::clamp(x, min_, max_); }

Universe make_universe(double min, double max, std::size_t n) { return Universe(min, max, n); }

MembershipFunction::MembershipFunction(Shape shape) : shape_(shape) { validate(shape_); }

double MembershipFunction::operator()(double x) const noexcept {
    if (std::isnan(x)) return 0.0;
    return std::clamp(std::visit(Evaluator{x}, shape_), 0.0, 1.0);
}

std::pair<double, double> MembershipFunction::support() const noexcept {
    struct {
        std::pair<double, double> operator()(const Triangular& t) const { return {t.a, t.c}; }
        std::pair<double, double> operator()(const Trapezoidal& t) const { return {t.a, t.d}; }
        std::pair<double, double> operator()(const Gaussian&) const { return {-kInf, kInf}; }
        std::pair<double, double> operator()(const ZShoulder& z) const { return {-kInf, z.b}; }
        std::pair<double, double> operator()(const SShoulder& s) const { return {s.a, kInf}; }
    } visitor;
    return std::visit(visitor, shape_);
}

double mf_eval(const MembershipFunction& mf, double x) noexcept { return mf(x); }

std::string shape_name(const Shape& shape) {
    struct {
        std::string operator()(const Triangular&) const { return "triangular"; }
        std::string operator()(const Trapezoidal&) const { return "trapezoidal"; }
        std::string operator()(const Gaussian&) const { return "gaussian"; }
        std::string operator()(const ZShoulder&) const { return "zshoulder"; }
        std::string operator()(const SShoulder&) const { return "sshoulder"; }
    } visitor;
    return std::visit(visitor, shape);
}

std::vector<double> shape_params(const Shape& shape) {
    struct {
        std::vector<double> operator()(const Triangular& t) const { return {t.a, t.b, t.c}; }
        std::vector<double> operator()(const Trapezoidal& t) const { return {t.a, t.b, t.c, t.d}; }
        std::vector<double> operator()(const Gaussian& g) const { return {g.center, g.sigma}; }
        std::vector<double> operator()(const ZShoulder& z) const { return {z.a, z.b}; }
        std::vector<double> operator()(const SShoulder& s) const { return {s.a, s.b}; }
    } visitor;
    return std::visit(visitor, shape);
}

LinguisticVariable::LinguisticVariable(std::string name, Universe universe, std::vector<LinguisticTerm> terms)
    : name_(std::move(name)), universe_(std::move(universe)), terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(ErrorKind::InvalidVariable, "variable '" + name_ + "' has no terms");
    std::set<std::string_view> seen;
    for (const auto& term : terms_) {
        if (term.name.empty())
            throw Error(ErrorKind::InvalidVariable, "variable '" + name_ + "' has a term with an empty name");
        if (!seen.insert(term.name).second)
            throw Error(ErrorKind::InvalidVariable, "variable '" + name_ + "' repeats term '" + term.name + "'");
        const auto [lo, hi] = term.mf.support();
        if (lo > universe_.max() || hi < universe_.min())
            throw Error(ErrorKind::InvalidVariable,
                        "term '" + term.name + "' lies entirely outside the universe of '" + name_ + "'");
    }
}

std::size_t LinguisticVariable::find_term(std::string_view name) const noexcept {
    const auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& t) { return t.name == name; });
    return static_cast<std::size_t>(it - terms_.begin());
}

FuzzySet::FuzzySet(Universe universe, std::vector<double> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (grades_.size() != universe_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "fuzzy set has " + std::to_string(grades_.size()) +
                                                      " grades for a universe of " +
                                                      std::to_string(universe_.size()) + " points");
    }
    for (double g : grades_) {
        if (!(g >= 0.0 && g <= 1.0)) throw Error(ErrorKind::InvalidArgument, "grade outside [0, 1]");
    }
}

FuzzySet FuzzySet::zeros(Universe universe) {
    const std::size_t n = universe.size();
    return FuzzySet(std::move(universe), std::vector<double>(n, 0.0));
}

FuzzySet discretize(const MembershipFunction& mf, const Universe& u) {
    std::vector<double> grades(u.size());
    std::transform(u.points().begin(), u.points().end(), grades.begin(), [&](double x) { return mf(x); });
    return FuzzySet(u, std::move(grades));
}

std::vector<double> singleton_fuzzify(double x0, const LinguisticVariable& var) {
    if (!std::isfinite(x0)) throw Error(ErrorKind::NonFiniteInput, "crisp input is not finite");
    const double x = var.universe().clamp(x0);
    std::vector<double> grades;
    grades.reserve(var.term_count());
    for (const auto& term : var.terms()) grades.push_back(term.mf(x));
    return grades;
}

} // namespace fuzzyreg

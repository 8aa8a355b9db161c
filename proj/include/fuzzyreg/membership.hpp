#ifndef FUZZYREG_MEMBERSHIP_HPP
#define FUZZYREG_MEMBERSHIP_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <string>
#include <variant>
#include <vector>

namespace fuzzyreg {

/// Uniformly sampled base set of a linguistic variable.
class Universe {
public:
    /// Throws Error(InvalidUniverse) unless min < max, n >= 2 and both bounds are finite.
    Universe(double min, double max, std::size_t n);

    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::span<const double> points() const noexcept { return points_; }
    double operator[](std::size_t i) const { return points_[i]; }
    double midpoint() const noexcept { return 0.5 * (min_ + max_); }
    double clamp(double x) const noexcept;

    bool operator==(const Universe&) const = default;

private:
    double min_;
    double max_;
    std::vector<double> points_;
};

Universe make_universe(double min, double max, std::size_t n);

// Membership shape families. Breakpoints are in the variable's units.
struct Triangular {
    double a, b, c;
    bool operator==(const Triangular&) const = default;
};
struct Trapezoidal {
    double a, b, c, d;
    bool operator==(const Trapezoidal&) const = default;
};
struct Gaussian {
    double center, sigma;
    bool operator==(const Gaussian&) const = default;
};
/// Grade 1 up to a, falling linearly to 0 at b.
struct ZShoulder {
    double a, b;
    bool operator==(const ZShoulder&) const = default;
};
/// Grade 0 up to a, rising linearly to 1 at b.
struct SShoulder {
    double a, b;
    bool operator==(const SShoulder&) const = default;
};

using Shape = std::variant<Triangular, Trapezoidal, Gaussian, ZShoulder, SShoulder>;

/// A validated membership function. Construction checks breakpoint ordering;
/// evaluation is total over the reals and always lands in [0, 1].
class MembershipFunction {
public:
    MembershipFunction(Shape shape);

    double operator()(double x) const noexcept;
    const Shape& shape() const noexcept { return shape_; }

    /// Closed interval outside of which the grade is 0 (may be infinite).
    std::pair<double, double> support() const noexcept;

    bool operator==(const MembershipFunction&) const = default;

private:
    Shape shape_;
};

double mf_eval(const MembershipFunction& mf, double x) noexcept;

/// Lower-case family name as used in controller documents ("triangular", ...).
std::string shape_name(const Shape& shape);
std::vector<double> shape_params(const Shape& shape);

struct LinguisticTerm {
    std::string name;
    MembershipFunction mf;

    bool operator==(const LinguisticTerm&) const = default;
};

class LinguisticVariable {
public:
    /// Throws Error(InvalidVariable) when there are no terms, on duplicate or empty
    /// term names, or a term whose support misses the universe.
    LinguisticVariable(std::string name, Universe universe, std::vector<LinguisticTerm> terms);

    const std::string& name() const noexcept { return name_; }
    const Universe& universe() const noexcept { return universe_; }
    const std::vector<LinguisticTerm>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Index of the term called `name`, or term_count() when absent.
    std::size_t find_term(std::string_view name) const noexcept;

    bool operator==(const LinguisticVariable&) const = default;

private:
    std::string name_;
    Universe universe_;
    std::vector<LinguisticTerm> terms_;
};

/// Membership grades sampled on a universe.
class FuzzySet {
public:
    /// Throws Error(DimensionMismatch) when the grade count differs from the
    /// universe size, Error(InvalidArgument) when a grade is outside [0, 1].
    FuzzySet(Universe universe, std::vector<double> grades);

    /// The empty set (all grades 0) on `universe`.
    static FuzzySet zeros(Universe universe);

    const Universe& universe() const noexcept { return universe_; }
    std::span<const double> grades() const noexcept { return grades_; }
    std::size_t size() const noexcept { return grades_.size(); }
    double operator[](std::size_t i) const { return grades_[i]; }

    bool operator==(const FuzzySet&) const = default;

private:
    Universe universe_;
    std::vector<double> grades_;
};

FuzzySet discretize(const MembershipFunction& mf, const Universe& u);

/// Grades of every term of `var` at the crisp value `x0`, clamped into the
/// universe first. Throws Error(NonFiniteInput) for NaN or infinities.
std::vector<double> singleton_fuzzify(double x0, const LinguisticVariable& var);

} // namespace fuzzyreg

#endif

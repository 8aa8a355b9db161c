#include "fuzzyreg/defuzz.hpp"

#include <algorithm>

#include "fuzzyreg/error.hpp"
#include "fuzzyreg/kernels.hpp"

namespace fuzzyreg {

double defuzz_cog(std::span<const double> points, std::span<const double> grades) {
    if (points.size() != grades.size())
        throw Error(ErrorKind::DimensionMismatch, "centroid needs one grade per point");
    const auto m = kernels::parallel::moments(points, grades);
    if (!(m.mass > 0.0)) throw Error(ErrorKind::ZeroMass, "every grade is zero; no rule fired");
    // Rounding can push the quotient a few ulps past the extreme points.
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    return std::clamp(m.weighted / m.mass, *lo, *hi);
}

double defuzz_cog(const FuzzySet& set) { return defuzz_cog(set.universe().points(), set.grades()); }

} // namespace fuzzyreg

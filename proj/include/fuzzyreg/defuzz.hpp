#ifndef FUZZYREG_DEFUZZ_HPP
#define FUZZYREG_DEFUZZ_HPP

#include <span>

#include "fuzzyreg/membership.hpp"

namespace fuzzyreg {

/// Discrete center of gravity, sum(x_i * mu_i) / sum(mu_i).
/// Throws Error(ZeroMass) when every grade is 0.
double defuzz_cog(const FuzzySet& set);

/// Same computation on raw samples; points and grades must have equal length.
double defuzz_cog(std::span<const double> points, std::span<const double> grades);

} // namespace fuzzyreg

#endif

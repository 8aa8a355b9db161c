#ifndef FUZZYREG_KERNELS_HPP
#define FUZZYREG_KERNELS_HPP

// Numeric inner loops shared by the inference and defuzzification layers.
//
// Each kernel exists twice: `serial` is the straightforward reference loop
// kept for testing and benchmarking, `parallel` splits the independent
// output positions across OpenMP threads. The max/min kernels are exact, so
// both variants agree bit for bit; `moments` agrees bit for bit up to
// `kParallelThreshold` samples and to rounding beyond. The parallel versions
// stay on one thread below `kParallelThreshold` elements.

#include <cstddef>
#include <span>

namespace fuzzyreg::kernels {

inline constexpr std::size_t kParallelThreshold = 4096;

/// Weighted sum and total mass of a sampled set.
struct Moments {
    double weighted = 0.0;
    double mass = 0.0;
};

namespace serial {

/// out[j] = max_i min(ap[i], relation[i*cols + j])
void max_min_compose(std::span<const double> relation, std::size_t cols,
                     std::span<const double> ap, std::span<double> out) noexcept;

/// out[j] = max_k min(levels[k], sets[k][j]); out is overwritten.
void clip_union(std::span<const double> levels, std::span<const std::span<const double>> sets,
                std::span<double> out) noexcept;

Moments moments(std::span<const double> points, std::span<const double> grades) noexcept;

} // namespace serial

namespace parallel {

void max_min_compose(std::span<const double> relation, std::size_t cols,
                     std::span<const double> ap, std::span<double> out) noexcept;

void clip_union(std::span<const double> levels, std::span<const std::span<const double>> sets,
                std::span<double> out) noexcept;

/// Sums fixed-size blocks independently and combines them in block order,
/// so the result does not depend on the thread count.
Moments moments(std::span<const double> points, std::span<const double> grades) noexcept;

} // namespace parallel

} // namespace fuzzyreg::kernels

#endif

#include "fuzzyreg/kernels.hpp"

#include <algorithm>
#include <vector>

namespace fuzzyreg::kernels {

namespace serial {

void max_min_compose(std::span<const double> relation, std::size_t cols,
                     std::span<const double> ap, std::span<double> out) noexcept {
    for (std::size_t j = 0; j < cols; ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < ap.size(); ++i) best = std::max(best, std::min(ap[i], relation[i * cols + j]));
        out[j] = best;
    }
}

void clip_union(std::span<const double> levels, std::span<const std::span<const double>> sets,
                std::span<double> out) noexcept {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], std::min(levels[k], sets[k][j]));
    }
}

Moments moments(std::span<const double> points, std::span<const double> grades) noexcept {
    Moments m;
    for (std::size_t i = 0; i < grades.size(); ++i) {
        m.weighted += points[i] * grades[i];
        m.mass += grades[i];
    }
    return m;
}

} // namespace serial

namespace parallel {

void max_min_compose(std::span<const double> relation, std::size_t cols,
                     std::span<const double> ap, std::span<double> out) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(cols);
    const std::size_t rows = ap.size();
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelThreshold)
    for (std::ptrdiff_t jj = 0; jj < n; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i) best = std::max(best, std::min(ap[i], relation[i * cols + j]));
        out[j] = best;
    }
}

void clip_union(std::span<const double> levels, std::span<const std::span<const double>> sets,
                std::span<double> out) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (out.size() * sets.size() >= kParallelThreshold)
    for (std::ptrdiff_t jj = 0; jj < n; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        double best = 0.0;
        for (std::size_t k = 0; k < sets.size(); ++k) best = std::max(best, std::min(levels[k], sets[k][j]));
        out[j] = best;
    }
}

Moments moments(std::span<const double> points, std::span<const double> grades) noexcept {
    const std::size_t n = grades.size();
    const std::size_t blocks = (n + kParallelThreshold - 1) / kParallelThreshold;
    if (blocks <= 1) return serial::moments(points, grades);

    std::vector<Moments> partial(blocks);
    const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t bb = 0; bb < nb; ++bb) {
        const auto b = static_cast<std::size_t>(bb);
        const std::size_t lo = b * kParallelThreshold;
        const std::size_t len = std::min(kParallelThreshold, n - lo);
        partial[b] = serial::moments(points.subspan(lo, len), grades.subspan(lo, len));
    }
    Moments total;
    for (const auto& p : partial) {
        total.weighted += p.weighted;
        total.mass += p.mass;
    }
    return total;
}

} // namespace parallel

} // namespace fuzzyreg::kernels

#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzyreg/defuzz.hpp"
#include "fuzzyreg/error.hpp"
#include "oracles.hpp"

using namespace fuzzyreg;

using Vec = std::vector<double>;

TEST_CASE("centroid examples") {
    CHECK(defuzz_cog(Vec{0, 1, 2}, Vec{1, 1, 1}) == 1.0);
    CHECK(defuzz_cog(Vec{0, 10}, Vec{1, 0}) == 0.0);
    CHECK(defuzz_cog(Vec{1, 2, 3, 4, 5}, Vec{0, 0, .1, .5, 1}) == doctest::Approx(4.5625).epsilon(1e-15));
    CHECK(defuzz_cog(FuzzySet(make_universe(1, 5, 5), {0, 0, .1, .5, 1})) ==
          doctest::Approx(4.5625).epsilon(1e-15));

    try {
        defuzz_cog(FuzzySet::zeros(make_universe(0, 1, 4)));
        FAIL("expected ZeroMass");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroMass);
    }
    CHECK_THROWS_AS(defuzz_cog(Vec{0, 1}, Vec{1}), Error);
}

TEST_CASE("property: centroid matches the reference loop and its invariants") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> size(2, 300);
    std::uniform_real_distribution<double> coord(-1e3, 1e3);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    for (int trial = 0; trial < 1000; ++trial) {
        double lo = coord(rng), hi = coord(rng);
        if (lo == hi) continue;
        if (lo > hi) std::swap(lo, hi);
        const Universe u = make_universe(lo, hi, size(rng));
        Vec grades = oracle::random_grades_with_ties(rng, u.size());
        grades[0] = std::max(grades[0], 1e-3);
        const Vec points(u.points().begin(), u.points().end());

        const double y = defuzz_cog(FuzzySet(u, grades));
        const double ref = oracle::centroid(points, grades);
        REQUIRE(std::abs(y - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        REQUIRE(y >= lo);
        REQUIRE(y <= hi);

        const double c = scale(rng);
        Vec scaled = grades;
        double top = 0.0;
        for (double g : scaled) top = std::max(top, g);
        const double factor = std::min(c, 1.0 / top);
        for (auto& g : scaled) g *= factor;
        REQUIRE(std::abs(defuzz_cog(points, scaled) - y) <= 1e-12 * std::max(1.0, std::abs(y)));

        const double d = coord(rng);
        Vec shifted = points;
        for (auto& x : shifted) x += d;
        REQUIRE(std::abs(defuzz_cog(shifted, grades) - (y + d)) <= 1e-12 * (std::abs(y) + std::abs(d) + (hi - lo)));
    }
}

TEST_CASE("property: symmetric grades give the midpoint") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> size(2, 200);
    for (int trial = 0; trial < 500; ++trial) {
        const Universe u = make_universe(-3.5, 17.25, size(rng));
        Vec grades = oracle::random_grades(rng, u.size());
        for (std::size_t i = 0; i < u.size() / 2; ++i) grades[u.size() - 1 - i] = grades[i];
        const double y = defuzz_cog(FuzzySet(u, grades));
        REQUIRE(std::abs(y - u.midpoint()) <= 1e-12 * (u.max() - u.min()));
    }
}

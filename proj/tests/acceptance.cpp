// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzyreg/cli.hpp"
#include "fuzzyreg/defuzz.hpp"
#include "fuzzyreg/error.hpp"
#include "fuzzyreg/inference.hpp"
#include "fuzzyreg/io.hpp"
#include "fuzzyreg/regulator.hpp"
#include "oracles.hpp"

using namespace fuzzyreg;

namespace {

using Vec = std::vector<double>;

const std::filesystem::path kSourceDir = FUZZYREG_SOURCE_DIR;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

// 1. Worked max-min example.
void worked_example() {
    const Vec a{1, .5, .1, 0, 0};
    const Vec b{0, 0, .1, .5, 1};
    const oracle::Mat printed{{0, 0, .1, .5, 1}, {0, 0, .1, .5, .5}, {0, 0, .1, .1, .1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    const FuzzyRelation r = build_relation(a, b);
    expect(r.rows() == 5 && r.cols() == 5, "relation shape");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            expect(std::round(r(i, j) * 10.0) / 10.0 == printed[i][j], "relation entry differs from printed R");

    const Vec bp = compose(r, a);
    const Vec brute = oracle::max_min(printed, a);
    expect(brute == Vec{0, 0, .1, .5, 1}, "brute-force oracle");
    expect(bp == brute, "cri differs from brute-force max-min");
    // The printed Bp has 0.1 at index 3; max-min gives 0.5 (see README).
    expect(bp[3] == 0.5, "index 3");
}

// 2. Recovery of B from a normal A.
void recovery() {
    std::mt19937_64 rng(2002);
    std::uniform_int_distribution<std::size_t> size(2, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec a = oracle::random_normal_grades(rng, size(rng));
        const Vec b = oracle::random_grades(rng, size(rng));
        const Vec out = compose(build_relation(a, b), a);
        for (std::size_t j = 0; j < b.size(); ++j)
            expect(std::abs(out[j] - b[j]) <= 1e-12, "recovery failed at trial " + std::to_string(trial));
    }
}

LinguisticVariable host(const char* name, std::size_t n) {
    return LinguisticVariable(name, make_universe(0, 1, n), {{"T", MembershipFunction(Triangular{0, 0.5, 1})}});
}

// 3. Clip-then-union against the explicit relation path.
void clip_vs_relation() {
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<std::size_t> size(2, 7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = size(rng), n = size(rng);
        const Vec a = oracle::random_grades_with_ties(rng, m);
        const Vec b = oracle::random_grades_with_ties(rng, n);
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
        Vec singleton(m, 0.0);
        singleton[at] = 1.0;

        const RuleBase rb(host("in", m), host("out", n), {Rule{0, 0}});
        const std::vector<FuzzySet> cons{FuzzySet(rb.output().universe(), b)};
        const FuzzySet clipped = infer(rb, Vec{a[at]}, cons);
        const Vec related = oracle::max_min(oracle::relation(a, b), singleton);
        for (std::size_t j = 0; j < n; ++j)
            expect(std::abs(clipped[j] - related[j]) <= 1e-12, "mismatch at trial " + std::to_string(trial));
    }
}

// 4. Centroid against the reference loop plus its invariants.
void defuzzification() {
    std::mt19937_64 rng(4004);
    std::uniform_int_distribution<std::size_t> size(2, 400);
    std::uniform_real_distribution<double> coord(-500.0, 500.0);
    std::uniform_real_distribution<double> factor(0.01, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double lo = coord(rng), hi = coord(rng);
        if (lo > hi) std::swap(lo, hi);
        if (lo == hi) hi = lo + 1.0;
        const Universe u = make_universe(lo, hi, size(rng));
        const Vec x(u.points().begin(), u.points().end());
        Vec g = oracle::random_grades_with_ties(rng, x.size());
        g[(x.size() - 1) / 2] = std::max(g[(x.size() - 1) / 2], 0.25);
        const std::string at = " at trial " + std::to_string(trial);

        const double y = defuzz_cog(FuzzySet(u, g));
        const double ref = oracle::centroid(x, g);
        expect(std::abs(y - ref) <= 1e-12 * std::max(std::abs(ref), 1e-300) || y == ref, "oracle" + at);
        expect(y >= lo && y <= hi, "bounded" + at);

        const double c = factor(rng);
        Vec scaled = g;
        for (auto& v : scaled) v *= c;
        const double ys = defuzz_cog(x, scaled);
        expect(std::abs(ys - y) <= 1e-12 * std::max(std::abs(y), 1.0), "scale invariance" + at);

        const double d = coord(rng);
        Vec shifted = x;
        for (auto& v : shifted) v += d;
        const double yt = defuzz_cog(shifted, g);
        expect(std::abs(yt - (y + d)) <= 1e-12 * (std::abs(lo) + std::abs(hi) + std::abs(d)), "translation" + at);

        Vec sym = g;
        for (std::size_t i = 0; i < sym.size() / 2; ++i) sym[sym.size() - 1 - i] = sym[i];
        const double ym = defuzz_cog(FuzzySet(u, sym));
        expect(std::abs(ym - u.midpoint()) <= 1e-12 * (hi - lo), "symmetry" + at);
    }
}

// 5. Peak recovery on the reference regulator.
void peak_recovery() {
    const Regulator reg = reference_regulator();
    const Vec ys(reg.output_universe().points().begin(), reg.output_universe().points().end());
    const double peaks[5] = {0, 25, 50, 75, 100};
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& rule = reg.rulebase().rules()[k];
        expect(rule.antecedent == k, "rule order");
        const auto& cons = reg.consequents()[rule.consequent];
        const double expected = oracle::centroid(ys, Vec(cons.grades().begin(), cons.grades().end()));
        const double got = evaluate(reg, peaks[k]).output;
        expect(std::abs(got - expected) <= 1e-9, "peak " + std::to_string(k));
    }
}

// 6. Response curve.
void response_curve() {
    const Regulator reg = reference_regulator();
    const auto curve = sweep(reg, 101);
    expect(curve.size() == 101, "length");
    for (std::size_t i = 1; i < curve.size(); ++i)
        expect(curve[i].output <= curve[i - 1].output + 1e-9, "increase at step " + std::to_string(i));

    const Vec ys = oracle::linspace(0, 1, 101);
    auto centroid_of = [&](int term) {
        Vec g(ys.size());
        for (std::size_t j = 0; j < ys.size(); ++j) g[j] = oracle::partition_grade(0, 1, term, ys[j]);
        return oracle::centroid(ys, g);
    };
    expect(std::abs(curve.front().output - centroid_of(4)) <= 1e-9, "starts at the CVB centroid");
    expect(std::abs(curve.back().output - centroid_of(0)) <= 1e-9, "ends at the CVS centroid");
}

int run_cli(std::vector<std::string> args, std::string* err = nullptr) {
    args.insert(args.begin(), "fuzzyreg");
    std::ostringstream out, errs;
    const int code = cli::run(args, out, errs);
    if (err) *err = errs.str();
    return code;
}

// 7. Config round trip and validation diagnostics.
void config_round_trip() {
    const auto ref_path = kSourceDir / "configs" / "reference.json";
    const Regulator loaded = load_config(ref_path);
    expect(loaded == reference_regulator(), "shipped file differs from the built-in regulator");
    expect(parse_config(serialize_config(loaded)) == loaded, "serialize/parse round trip");
    expect(run_cli({"check", "--config", ref_path.string()}) == cli::kExitOk, "check exit 0");

    const std::string doc = read_text_file(ref_path);
    const auto dir = std::filesystem::temp_directory_path() / "fuzzyreg_acceptance";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, std::string text, const std::string& from, const std::string& to) {
        text.replace(text.find(from), from.size(), to);
        const auto p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    };

    std::string err;
    const auto unknown = write("unknown.json", doc, "\"then\": \"CB\"", "\"then\": \"XX\"");
    expect(run_cli({"check", "--config", unknown}, &err) == cli::kExitConfig, "unknown term exit code");
    expect(err.find("ValidationError") != std::string::npos && err.find("XX") != std::string::npos,
           "unknown term diagnostic");

    const auto order = write("order.json", doc, "[0.0, 25.0, 50.0]", "[5, 2, 9]");
    expect(run_cli({"check", "--config", order}, &err) == cli::kExitConfig, "ordering exit code");
    expect(err.find("ValidationError") != std::string::npos && err.find("/input/terms/1/params") != std::string::npos,
           "ordering diagnostic");

    const auto type = write("type.json", doc, "\"sshoulder\"", "\"bell\"");
    expect(run_cli({"check", "--config", type}, &err) == cli::kExitConfig, "unknown type exit code");
    expect(err.find("bell") != std::string::npos, "unknown type diagnostic");

    const auto broken = write("broken.json", doc, "\"rules\": [", "\"rules\": [[");
    expect(run_cli({"check", "--config", broken}, &err) == cli::kExitConfig, "malformed exit code");
    expect(err.find("ParseError") != std::string::npos && err.find("line ") != std::string::npos, "malformed diagnostic");

    std::string discard;
    expect(run_cli({"eval", "--config", ref_path.string(), "--input", "-5"}, &discard) == cli::kExitOk, "eval exit 0");
    expect(run_cli({"eval", "--config", ref_path.string()}, &discard) == cli::kExitUsage, "usage exit 64");
}

// 8. Lattice laws for union.
void lattice_laws() {
    std::mt19937_64 rng(8008);
    std::uniform_int_distribution<std::size_t> size(2, 16);
    for (int trial = 0; trial < 1000; ++trial) {
        const Universe u = make_universe(0, 1, size(rng));
        const FuzzySet x(u, oracle::random_grades_with_ties(rng, u.size()));
        const FuzzySet y(u, oracle::random_grades_with_ties(rng, u.size()));
        const FuzzySet z(u, oracle::random_grades_with_ties(rng, u.size()));
        expect(fuzzy_union(x, y) == fuzzy_union(y, x), "commutativity");
        expect(fuzzy_union(fuzzy_union(x, y), z) == fuzzy_union(x, fuzzy_union(y, z)), "associativity");
        expect(fuzzy_union(x, x) == x, "idempotence");
        expect(fuzzy_union(x, FuzzySet::zeros(u)) == x, "identity");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> criteria{
        {"1 worked max-min example (R exact, Bp = brute-force oracle)", worked_example},
        {"2 CRI recovery, 1000 random pairs, tol 1e-12", recovery},
        {"3 clip vs relation path, 500 instances <= 7x7, tol 1e-12", clip_vs_relation},
        {"4 centroid oracle + scale/translation/bounds/symmetry, 1000 sets", defuzzification},
        {"5 reference peak recovery, tol 1e-9", peak_recovery},
        {"6 reference 101-point response curve non-increasing", response_curve},
        {"7 config round trip and validation exit codes", config_round_trip},
        {"8 union lattice laws, 1000 triples", lattice_laws},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            check();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%s]  (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", name, ms, ok ? "" : "  ", detail.c_str());
        failed += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

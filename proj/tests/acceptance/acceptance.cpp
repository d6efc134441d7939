// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "dyndeg/cyclo.hpp"
#include "dyndeg/fabc.hpp"
#include "dyndeg/gfam.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/ratmap.hpp"
#include "verify.hpp"

using namespace dyndeg;

namespace {

// Tolerances and limits.
constexpr double root_modulus_slack = 1e-9;
constexpr double height_slack = 1e-6;
constexpr double prop64_band = 1e-6;
constexpr double spectral_tol = 1e-9;
constexpr double growth_rel_err = 0.02;
constexpr double lambda_fib = 2.618034;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

ProjectivePoint<Rational> pt(Rational x, Rational y, Rational z) { return ProjectivePoint<Rational>({x, y, z}); }

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    int v = 0;
    while (v == 0) v = d(rng);
    Rational q(v, 1 + static_cast<int>(rng() % 4));
    q.canonicalize();
    return q;
}

Outcome degree_sequences() {
    Outcome o;
    auto const stable = degree_sequence(build_map(FabcParams{1, 1, 1}), 5);
    for (std::size_t n = 1; n <= 5; ++n) o.require(stable.computed() >= n && stable[n] == (1ULL << n), "f_{1,1,1}");
    auto const unstable = build_map(FabcParams{1, -1, 1});
    auto const seq = degree_sequence(unstable, 3);
    o.require(seq.computed() == 3 && seq[3] < 8, "deg f_{1,-1,1}^3 < 8");
    auto const rep = is_algebraically_stable_up_to(unstable, 3);
    o.require(rep.drop_at == std::optional<std::size_t>(3), "drop_at = 3");
    o.detail = o.pass ? "deg f_{1,-1,1}^3 = " + std::to_string(seq[3]) : o.detail;
    return o;
}

Outcome classifier_grid() {
    Outcome o;
    auto const r = cli::run_suite("fabc-grid", {});
    o.require(r.instances == 342, "expected 342 nonzero triples");
    o.require(r.passed(), r.failures.empty() ? "" : r.failures.front().check + " " + r.failures.front().detail);
    if (o.pass) o.detail = std::to_string(r.checks) + " checks, 0 disagreements";
    return o;
}

Outcome edge_case() {
    Outcome o;
    FabcParams const p{1, -1, 2};
    o.require(classify(p).status == StabilityVerdict::Status::Stable, "classified Stable");
    auto const v = vn_sequence(p, 20);
    for (std::size_t n = 0; n <= 20; ++n) o.require(v[n] == Rational(static_cast<long>(n + 1)), "V_n = n + 1");
    auto const seq = degree_sequence(build_map(p), 5);
    for (std::size_t n = 1; n <= 5; ++n) o.require(seq.computed() >= n && seq[n] == (1ULL << n), "deg = 2^n");
    return o;
}

std::uint64_t order_of_two(std::uint64_t p) {
    std::uint64_t x = 2 % p, k = 1;
    while (x != 1) x = x * 2 % p, ++k;
    return k;
}

Outcome xie_mod_p() {
    Outcome o;
    o.require(classify(FabcParams{-2, 1, 3}).status == StabilityVerdict::Status::Stable, "Stable over Q");
    std::size_t primes = 0;
    for (std::uint64_t p = 5; p <= 97; ++p) {
        if (!is_probable_prime(p)) continue;
        ++primes;
        auto const r = classify_mod_p(-2, 1, 3, p);
        o.require(r.kind == ModPResult::Kind::ExceptionalAt && r.m == order_of_two(p) - 1,
                  "p = " + std::to_string(p));
    }
    for (auto [p, m] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {7, 2}, {11, 9}, {31, 4}}) {
        o.require(classify_mod_p(-2, 1, 3, p).m == m, "spot check p = " + std::to_string(p));
    }
    for (std::uint64_t p : {2, 3}) {
        o.require(classify_mod_p(-2, 1, 3, p).kind == ModPResult::Kind::DegenerateModP, "p | 6 degenerate");
    }
    if (o.pass) o.detail = std::to_string(primes) + " primes";
    return o;
}

Outcome inverse_geometry() {
    Outcome o;
    std::mt19937_64 rng(20240501);
    for (int i = 0; i < 20; ++i) {
        FabcParams const p{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng)};
        o.require(compose(inverse_map(p), build_map(p)) == ProjectiveMap<Rational>::identity(2), "g o f = id");
    }
    o.require(critical_locus_symbolic() == parse_poly("-2*a*b*Y*Z^2", fabc_symbolic_names()), "Jacobian");

    FabcParams const p{3, -2, 5};
    auto const f = build_map(p);
    std::uniform_int_distribution<int> d(-20, 20);
    int round_trips = 0;
    while (round_trips < 50) {
        Rational const x = d(rng), y = d(rng), z = d(rng);
        if (y == 0 || z == 0) continue;  // critical locus
        auto const source = pt(x, y, z);
        auto const image = apply(f, source);
        if (!image) continue;
        auto const pre = preimage(p, *image);
        o.require(pre.kind == Preimage::Kind::Point && pre.point && *pre.point == source, "preimage round trip");
        ++round_trips;
    }
    o.require(preimage(p, pt(0, 0, 1)).kind == Preimage::Kind::Empty, "[0,0,1] empty");
    int empties = 0;
    for (int t = -5; empties < 10; ++t) {
        if (t == 1) continue;  // [a, a, 0] = [1, 1, 0] has a whole line as fibre
        o.require(preimage(p, pt(p.a, p.a * t, p.c * t - p.c)).kind == Preimage::Kind::Empty, "[a,at,ct-c] empty");
        ++empties;
    }
    return o;
}

Outcome exceptional_locus() {
    Outcome o;
    auto const fam = parse_family("1", "1", "T");
    auto const locus = family_exceptional_locus(fam, 30);
    o.require(locus.entries.size() == 28, "entries for n = 3..30");
    auto poly = [&](std::size_t n) { return format_family_poly(to_rational_poly(locus.entries.at(n - 3).poly)); };
    o.require(poly(3) == "T^2 + 1", "p_3");
    o.require(poly(4) == "T^2 + 2", "p_4");
    o.require(poly(5) == "T^4 + 3*T^2 + 1", "p_5");
    o.require(poly(6) == "T^2 + 3", "p_6");
    double max_mod = 0, max_height = 0;
    QPoly const zeta_one = parse_poly("X^2 + 4", 1);
    o.require(to_rational_poly(locus.zeta_one_locus) == zeta_one, "zeta = 1 locus");
    for (auto const& e : locus.entries) {
        for (auto z : e.roots) max_mod = std::max(max_mod, std::abs(z));
        for (double h : e.heights) max_height = std::max(max_height, h);
        o.require(gcd(to_rational_poly(e.poly), zeta_one).is_constant(), "T^2 + 4 excluded");
    }
    o.require(max_mod <= 2 + root_modulus_slack, "|t| <= 2");
    o.require(max_height <= std::log(2.0) + height_slack, "height <= log 2");
    std::ostringstream s;
    s << std::setprecision(9) << "max |t| = " << max_mod << ", max height = " << max_height;
    if (o.pass) o.detail = s.str();
    return o;
}

Outcome monomial_suite() {
    Outcome o;
    cli::SuiteConfig config;
    config.count = 1000;
    config.seed = 42;
    config.tolerance = prop64_band;
    auto const r = cli::run_suite("monomial", config);
    o.require(r.instances == 1500, "1000 random + 500 unimodular");
    o.require(r.passed(), r.failures.empty() ? "" : r.failures.front().check + " " + r.failures.front().detail);
    if (o.pass) o.detail = std::to_string(r.checks) + " checks, seed 42";
    return o;
}

Outcome hasselblatt_propp() {
    Outcome o;
    std::size_t compared = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
        std::mt19937_64 rng(cli::instance_seed(42, i));
        std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        MonomialMap const m(random_nonsingular_matrix(rng, n, -9, 9));
        if (n > 3) continue;
        ++compared;
        o.require(Integer(static_cast<unsigned long>(homogenize(m).degree())) == degree_D(m), "D(A) = deg");
    }
    IntMatrix const a{{2, 1}, {1, 1}};
    double const root = std::pow(degree_D(matrix_power(a, 12)).get_d(), 1.0 / 12);
    o.require(std::abs(root - lambda_fib) / lambda_fib <= growth_rel_err, "D(A^12)^(1/12)");
    auto const lambda = spectral_radius(MonomialMap(a), spectral_tol);
    o.require(std::abs(lambda.value - lambda_fib) < 1e-6, "lambda");
    std::ostringstream s;
    s << compared << " matrices with N <= 3; D(A^12)^(1/12) = " << std::setprecision(7) << root;
    if (o.pass) o.detail = s.str();
    return o;
}

Outcome gfam() {
    Outcome o;
    auto check_prefix = [&](GFamilyParams const& p, std::vector<long> const& want, char const* what) {
        auto const e = exceptional_set(p, want.size() - 1);
        o.require(e == std::vector<Rational>(want.begin(), want.end()), what);
    };
    check_prefix({1, 1}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, "E(g_{1,1,T})");
    check_prefix({1, 2}, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, "E(g_{1,2,T})");
    check_prefix({2, 0}, {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}, "E(g_{2,0,T})");
    auto const suite = cli::run_suite("gfam", {});
    o.require(suite.passed(), "orbit / closed form agreement");
    for (int t : {2, 3}) {
        auto const r = is_algebraically_stable_up_to(build_g(GFamilyParams{1, 1}, t), 5);
        o.require(r.drop_at.has_value(), "degree drop for g_{1,1,t}");
    }
    auto const rep = negative_answer_report(10);
    auto ints = [](std::vector<long> v) { return std::vector<Integer>(v.begin(), v.end()); };
    o.require(rep.intersection == ints({1, 3, 5, 7, 9}), "intersection");
    o.require(rep.symmetric_difference == ints({2, 4, 6, 8, 10}), "symmetric difference");
    return o;
}

// Recomputes every k-ratio from scratch and checks that m works and m - 1 does not.
bool m_epsilon_valid(IntMatrix const& a, double epsilon, std::size_t m) {
    std::size_t const n = a.size();
    double const target = spectral_radius(MonomialMap(a), spectral_tol).value - epsilon;
    auto works = [&](std::size_t mm) {
        for (std::size_t k = 0; k < n; ++k) {
            double const num = degree_D(matrix_power(a, (k + 1) * mm)).get_d();
            double const den = degree_D(matrix_power(a, k * mm)).get_d();
            if (std::pow(gamma_N(n) * num / den, 1.0 / static_cast<double>(mm)) < target) return false;
        }
        return true;
    };
    return works(m) && (m == 1 || !works(m - 1));
}

Outcome m_epsilon() {
    Outcome o;
    IntMatrix const id = identity_matrix(2);
    auto const r = find_m_epsilon(MonomialMap(id), 0.9, spectral_tol);
    o.require(r.m == std::optional<std::size_t>(2), "identity, eps = 0.9 -> m = 2");
    o.require(r.m && m_epsilon_valid(id, 0.9, *r.m), "identity recomputation");
    IntMatrix const fib{{2, 1}, {1, 1}};
    auto const f = find_m_epsilon(MonomialMap(fib), 1.0, spectral_tol);
    o.require(f.m.has_value(), "[[2,1],[1,1]], eps = 1.0 found");
    o.require(f.m && m_epsilon_valid(fib, 1.0, *f.m), "[[2,1],[1,1]] recomputation");
    if (o.pass) o.detail = "m = 2 and m = " + std::to_string(*f.m);
    return o;
}

struct Criterion {
    int id;
    char const* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> const criteria{
        {1, "stability degree sequences", 30, degree_sequences},
        {2, "classifier grid", 300, classifier_grid},
        {3, "edge case c^2 + 4ab = 0", 30, edge_case},
        {4, "mod-p exceptional indices", 30, xie_mod_p},
        {5, "inverse geometry", 60, inverse_geometry},
        {6, "exceptional locus of (1,1,T)", 60, exceptional_locus},
        {7, "monomial suite", 120, monomial_suite},
        {8, "degree formula cross-check", 60, hasselblatt_propp},
        {9, "g family", 60, gfam},
        {10, "m for epsilon", 60, m_epsilon},
    };
    int failures = 0;
    for (auto const& c : criteria) {
        auto const start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (std::exception const& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            out.pass = false;
            out.detail = "over time limit of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
        }
        failures += out.pass ? 0 : 1;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!out.detail.empty()) std::cout << " - " << out.detail;
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures;
}

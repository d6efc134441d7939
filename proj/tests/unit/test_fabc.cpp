#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "dyndeg/fabc.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"

using namespace dyndeg;
using Status = StabilityVerdict::Status;

namespace {

QPoly P(char const* s) { return parse_poly(s, 3); }
ProjectivePoint<Rational> pt(Rational x, Rational y, Rational z) { return ProjectivePoint<Rational>({x, y, z}); }

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-7, 7);
    int v = 0;
    while (v == 0) v = d(rng);
    Rational q(v, 1 + static_cast<int>(rng() % 3));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_SUITE("fabc") {

TEST_CASE("construction") {
    auto const f = build_map(FabcParams{1, 1, 1});
    CHECK(f.coords()[0] == P("X*Y"));
    CHECK(f.coords()[1] == P("X*Y+Z^2"));
    CHECK(f.coords()[2] == P("Y*Z+Z^2"));
    auto const x = build_map(FabcParams{-2, 1, 3});
    CHECK(x.coords()[1] == P("X*Y-2*Z^2"));
    CHECK(x.coords()[2] == P("Y*Z+3*Z^2"));
    CHECK_THROWS_AS(build_map(FabcParams{0, 1, 1}), DegenerateParameters);
}

TEST_CASE("unreduced fractions are accepted") {
    FabcParams const raw{Rational(4, 2), Rational(-6, 3), Rational(9, 3)};
    CHECK(build_map(raw) == build_map(FabcParams{2, -2, 3}));
    CHECK(compose(inverse_map(raw), build_map(raw)) == ProjectiveMap<Rational>::identity(2));
    CHECK(ProjectivePoint<Rational>({Rational(2, 4), 1, 0}) == pt(1, 2, 0));
    CHECK(classify(FabcParams{Rational(2, 2), Rational(-3, 3), Rational(4, 4)}).zeta_order == std::optional<std::size_t>(3));
}

TEST_CASE("inverse map") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        FabcParams const p{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng)};
        CHECK(compose(inverse_map(p), build_map(p)) == ProjectiveMap<Rational>::identity(2));
        CHECK(compose(build_map(p), inverse_map(p)) == ProjectiveMap<Rational>::identity(2));
    }
    CHECK(compose(inverse_map_symbolic(), build_map_symbolic()) == ProjectiveMap<Rational>::identity(2, 3));
}

TEST_CASE("indeterminacy locus") {
    for (auto const& p : {FabcParams{1, 1, 1}, FabcParams{2, -3, 5}}) {
        auto pts = indeterminacy_points(p);
        REQUIRE(pts.size() == 2);
        CHECK(std::count(pts.begin(), pts.end(), pt(0, 1, 0)) == 1);
        CHECK(std::count(pts.begin(), pts.end(), pt(1, 0, 0)) == 1);
        for (auto const& q : pts) CHECK_FALSE(apply(build_map(p), q).has_value());
    }
}

TEST_CASE("critical locus") {
    std::vector<std::string> const names = fabc_symbolic_names();
    CHECK(critical_locus_symbolic() == parse_poly("-2*a*b*Y*Z^2", names));
    CHECK(canonical_scaling(critical_locus(FabcParams{1, 1, 1})) == P("Y*Z^2"));
    CHECK(canonical_scaling(critical_locus(FabcParams{1, -1, 1})) == P("Y*Z^2"));
}

TEST_CASE("fibres") {
    FabcParams const p{1, 1, 1};
    auto const line = preimage(p, pt(0, 1, 1));
    CHECK(line.kind == Preimage::Kind::LineMinusPoints);
    CHECK(canonical_scaling(*line.line) == P("Y"));
    CHECK(preimage(p, pt(0, 0, 1)).kind == Preimage::Kind::Empty);
    auto const single = preimage(p, pt(1, 2, 3));
    REQUIRE(single.kind == Preimage::Kind::Point);
    CHECK(*single.point == pt(1, 4, 2));
    CHECK(*apply(build_map(p), *single.point) == pt(1, 2, 3));
    auto const z0 = preimage(p, pt(1, 1, 0));
    CHECK(z0.kind == Preimage::Kind::LineMinusPoints);
    CHECK(preimage(p, pt(2, 2, 5)).kind == Preimage::Kind::Empty);
    FabcParams const q{2, 3, 5};
    for (int t : {-3, -2, -1, 0, 2, 3, 4}) {
        CHECK(preimage(q, pt(q.a, q.a * t, q.c * t - q.c)).kind == Preimage::Kind::Empty);
    }
}

TEST_CASE("fibres round-trip on random points") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-9, 9);
    FabcParams const p{2, -1, 3};
    auto const f = build_map(p);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> c{d(rng), d(rng), d(rng)};
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        auto const q = ProjectivePoint<Rational>(c);
        auto const pre = preimage(p, q);
        if (pre.kind == Preimage::Kind::Point) CHECK(*apply(f, *pre.point) == q);
        if (pre.kind == Preimage::Kind::Empty) CHECK(pre.description.size() > 0);
    }
}

TEST_CASE("V_n recurrence") {
    auto const v = vn_sequence(FabcParams{1, -2, 2}, 3);
    CHECK(v == std::vector<Rational>{1, 2, 2, 0});
    auto const edge = vn_sequence(FabcParams{1, -1, 2}, 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(edge[n] == Rational(static_cast<long>(n + 1)));
    auto const x = vn_sequence(FabcParams{-2, 1, 3}, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(x[n] == Rational((2L << n) - 1));
}

TEST_CASE("classifier examples") {
    CHECK(classify(FabcParams{1, 1, 1}).status == Status::Stable);
    auto const u = classify(FabcParams{1, -1, 1});
    CHECK(u.status == Status::Unstable);
    CHECK(u.zeta_order == std::optional<std::size_t>(3));
    CHECK(u.vanishing_index == std::optional<std::size_t>(2));
    CHECK(classify(FabcParams{1, -1, 2}).status == Status::Stable);
    auto const four = classify(FabcParams{1, -2, 2});
    CHECK(four.zeta_order == std::optional<std::size_t>(4));
    CHECK(four.vanishing_index == std::optional<std::size_t>(3));
    auto const six = classify(FabcParams{1, -3, 3});
    CHECK(six.zeta_order == std::optional<std::size_t>(6));
    CHECK(classify(FabcParams{0, 1, 1}).status == Status::Degenerate);
    CHECK(classify(FabcParams{-2, 1, 3}).status == Status::Stable);
    CHECK(std::string(to_string(Status::Unstable)) == "unstable");
}

TEST_CASE("psi map") {
    CHECK(psi_map(1) == -4);
    CHECK(psi_map(-2) == Rational(1, 2));
    CHECK(psi_map(-1) == 0);
    CHECK_THROWS(psi_map(0));
}

TEST_CASE("mod p classifier") {
    auto const seven = classify_mod_p(-2, 1, 3, 7);
    CHECK(seven.kind == ModPResult::Kind::ExceptionalAt);
    CHECK(seven.m == std::optional<std::uint64_t>(2));
    CHECK(classify_mod_p(-2, 1, 3, 5).m == std::optional<std::uint64_t>(3));
    CHECK(classify_mod_p(-2, 1, 3, 3).kind == ModPResult::Kind::DegenerateModP);
    CHECK(classify_mod_p(-2, 1, 3, 2).kind == ModPResult::Kind::DegenerateModP);
    CHECK_THROWS_AS(classify_mod_p(-2, 1, 3, 9), std::invalid_argument);
}

TEST_CASE("generic stability of families") {
    CHECK(family_generic_stability(parse_family("1", "1", "T")).kind == GenericStability::Kind::GenericallyStable);
    auto const u = family_generic_stability(parse_family("1", "-1", "1"));
    CHECK(u.kind == GenericStability::Kind::GenericallyUnstable);
    CHECK(u.zeta_order == std::optional<std::size_t>(3));
    auto const t = family_generic_stability(parse_family("T", "T", "T"));
    CHECK(t.kind == GenericStability::Kind::GenericallyStable);
    CHECK(t.kappa == std::optional<Rational>(1));
}

TEST_CASE("exceptional locus of (1,1,T)") {
    auto const locus = family_exceptional_locus(parse_family("1", "1", "T"), 12);
    auto poly = [&](std::size_t n) { return format_family_poly(to_rational_poly(locus.entries.at(n - 3).poly)); };
    CHECK(poly(3) == "T^2 + 1");
    CHECK(poly(4) == "T^2 + 2");
    CHECK(poly(5) == "T^4 + 3*T^2 + 1");
    CHECK(poly(6) == "T^2 + 3");
    for (auto const& h : locus.entries.front().heights) CHECK(h == doctest::Approx(0.0));
    for (auto const& e : locus.entries) {
        for (auto z : e.roots) CHECK(locus_residual(parse_family("1", "1", "T"), e.n, z) < 1e-9);
    }
    CHECK_THROWS_AS(family_exceptional_locus(parse_family("1", "-1", "1"), 6), std::domain_error);
}

TEST_CASE("intersection explorer") {
    auto const f = parse_family("1", "1", "T");
    auto const same = unlikely_intersection_explorer(f, f, 12);
    CHECK(same.symmetric_difference == 0);
    CHECK(same.phi_equal);
    auto const other = unlikely_intersection_explorer(f, parse_family("T", "1", "T"), 12);
    CHECK_FALSE(other.phi_equal);
    CHECK(other.intersection + other.symmetric_difference > 0);
}

}  // TEST_SUITE

#include <cmath>

#include "doctest.h"

#include "dyndeg/fabc.hpp"
#include "dyndeg/gfam.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/ratmap.hpp"

using namespace dyndeg;

namespace {

QPoly P(char const* s) { return parse_poly(s, 3); }

ProjectiveMap<Rational> map3(char const* x, char const* y, char const* z) {
    return ProjectiveMap<Rational>::create({P(x), P(y), P(z)});
}

ProjectivePoint<Rational> pt(int x, int y, int z) { return ProjectivePoint<Rational>({x, y, z}); }

}  // namespace

TEST_SUITE("ratmap") {

TEST_CASE("normalization") {
    auto const f = map3("X^2", "X*Y", "X*Z");
    CHECK(f.degree() == 1);
    CHECK(f == ProjectiveMap<Rational>::identity(2));
    auto const g = map3("X*Y", "X*Y+Z^2", "Y*Z+Z^2");
    CHECK(g.degree() == 2);
    CHECK(g.coords()[0] == P("X*Y"));
    CHECK(map3("2*X^2", "4*Y^2", "0").coords()[0] == P("X^2"));
    CHECK_THROWS_AS(map3("0", "0", "0"), InvalidMap);
    CHECK_THROWS_AS(map3("X^2", "Y", "Z"), InvalidMap);
}

TEST_CASE("composition") {
    auto const f = build_map(FabcParams{1, 1, 1});
    CHECK(compose(ProjectiveMap<Rational>::identity(2), f) == f);
    CHECK(compose(f, ProjectiveMap<Rational>::identity(2)) == f);
    CHECK(compose(f, f).degree() == 4);
    auto const u = build_map(FabcParams{1, -1, 1});
    CHECK(compose(u, compose(u, u)).degree() < 8);
    auto const h = map3("X^2+Y*Z", "Y^2", "Z^2");
    CHECK(compose(compose(f, u), h) == compose(f, compose(u, h)));
}

TEST_CASE("degree sequences and estimates") {
    auto const seq = degree_sequence(build_map(FabcParams{1, 1, 1}), 5);
    CHECK(seq.degrees == std::vector<std::uint64_t>{2, 4, 8, 16, 32});
    CHECK_FALSE(seq.truncated);
    DegreeSequence geo{{2, 4, 8, 16}, 4, false};
    CHECK(dyndeg_estimate(geo).root_estimate == doctest::Approx(2.0));
    CHECK(dyndeg_estimate(geo).ratio_estimate == doctest::Approx(2.0));
    DegreeSequence flat{{1, 1, 1}, 3, false};
    CHECK(dyndeg_estimate(flat).root_estimate == doctest::Approx(1.0));
    CHECK(dyndeg_estimate(flat).ratio_estimate == doctest::Approx(1.0));
}

TEST_CASE("monomial map degrees approach the spectral radius") {
    MonomialMap const m({{2, 1}, {1, 1}});
    auto const seq = degree_sequence(homogenize(m), 12);
    REQUIRE(seq.computed() == 12);
    double const root = std::pow(static_cast<double>(seq[12]), 1.0 / 12);
    CHECK(std::abs(root - 2.618034) / 2.618034 <= 0.02);
}

TEST_CASE("term cap reports truncation") {
    IterationLimits limits;
    limits.max_terms = 10;
    auto const seq = degree_sequence(build_map(FabcParams{1, 1, 1}), 6, limits);
    CHECK(seq.truncated);
    CHECK(seq.computed() < 6);
}

TEST_CASE("stability reports") {
    CHECK(is_algebraically_stable_up_to(build_map(FabcParams{1, 1, 1}), 5).stable_so_far());
    auto const r = is_algebraically_stable_up_to(build_map(FabcParams{1, -1, 1}), 5);
    REQUIRE(r.drop_at.has_value());
    CHECK(*r.drop_at == 3);
    auto const g = is_algebraically_stable_up_to(build_g(GFamilyParams{1, 1}, 2), 4);
    REQUIRE(g.drop_at.has_value());
    CHECK(*g.drop_at <= 4);
}

TEST_CASE("apply and orbits") {
    auto const f = build_map(FabcParams{1, 1, 1});
    CHECK_FALSE(apply(f, pt(0, 1, 0)).has_value());
    CHECK(*apply(f, pt(1, 2, 0)) == pt(1, 1, 0));
    CHECK(*apply(f, pt(0, 0, 1)) == pt(0, 1, 1));

    auto const o = orbit(build_map(FabcParams{1, -1, 1}), pt(0, 0, 1), 5);
    REQUIRE(o.hit_indeterminacy.has_value());
    CHECK(*o.hit_indeterminacy == 2);
    CHECK(o.points.size() == 3);
    CHECK(o.points[1] == pt(0, 1, 1));
    CHECK(o.points[2] == pt(0, 1, 0));

    auto const fixed = orbit(build_map(FabcParams{2, -3, 5}), pt(1, 1, 0), 4);
    CHECK(fixed.completed());
    for (auto const& q : fixed.points) CHECK(q == pt(1, 1, 0));
}

TEST_CASE("dominance") {
    CHECK(dominance_check(build_map(FabcParams{1, 1, 1})));
    CHECK(dominance_check(build_map_symbolic()));
    CHECK(dominance_check(ProjectiveMap<Rational>::identity(2)));
    CHECK_FALSE(dominance_check(map3("X", "X", "X")));
}

}  // TEST_SUITE

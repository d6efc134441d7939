#include "doctest.h"

#include "dyndeg/fabc.hpp"
#include "dyndeg/gfam.hpp"
#include "dyndeg/poly_text.hpp"

using namespace dyndeg;

namespace {

std::vector<Rational> prefix(GFamilyParams const& p, std::vector<long> const& want) {
    auto e = exceptional_set(p, want.size() - 1);
    return e;
}

std::vector<Rational> as_rationals(std::vector<long> const& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("gfam") {

TEST_CASE("forms") {
    auto const forms = g_forms(GFamilyParams{1, 1}, 0);
    CHECK(forms[0] == parse_poly("(X+Z)*X + (X-Z)*Y", 3));
    CHECK(forms[1] == parse_poly("(X-Z)*Y", 3));
    CHECK(forms[2] == parse_poly("X*Z", 3));
    CHECK(build_g(GFamilyParams{1, 1}, 0).degree() == 2);
    CHECK(build_g(GFamilyParams{1, 1}, 1).degree() == 1);
    CHECK_THROWS_AS(build_g(GFamilyParams{0, 1}, 2), DegenerateParameters);
}

TEST_CASE("exceptional sets") {
    std::vector<long> const e11{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<long> const e12{1, 3, 5, 7, 9, 11, 13, 15, 17, 19};
    std::vector<long> const e20{1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    CHECK(prefix(GFamilyParams{1, 1}, e11) == as_rationals(e11));
    CHECK(prefix(GFamilyParams{1, 2}, e12) == as_rationals(e12));
    CHECK(prefix(GFamilyParams{2, 0}, e20) == as_rationals(e20));
}

TEST_CASE("exact membership") {
    CHECK(exceptional_index(GFamilyParams{1, 1}, 5) == std::optional<std::size_t>(4));
    CHECK_FALSE(exceptional_index(GFamilyParams{1, 2}, 4).has_value());
    CHECK(exceptional_index(GFamilyParams{2, 0}, 1024) == std::optional<std::size_t>(10));
    CHECK_FALSE(exceptional_index(GFamilyParams{2, 0}, 1000).has_value());
    CHECK(exceptional_index(GFamilyParams{Rational(1, 2), 1}, Rational(3, 2)) == std::optional<std::size_t>(1));
    CHECK(exceptional_index(GFamilyParams{-1, 3}, 2) == std::optional<std::size_t>(1));
    CHECK_FALSE(exceptional_index(GFamilyParams{-1, 3}, 5).has_value());
}

TEST_CASE("marked orbit") {
    auto const hit = orbit_marked_point(GFamilyParams{1, 1}, 5, 50);
    CHECK(hit.hit_at == std::optional<std::size_t>(4));
    CHECK(hit.first_coords == as_rationals({1, 2, 3, 4, 5}));
    CHECK_FALSE(orbit_marked_point(GFamilyParams{1, 2}, 4, 50).hit_at.has_value());
    CHECK(orbit_marked_point(GFamilyParams{1, 1}, 1, 50).hit_at == std::optional<std::size_t>(0));
    CHECK(orbit_marked_point(GFamilyParams{1, 1}, 1, 50).degenerate_map);
}

TEST_CASE("degree drop at exceptional parameters") {
    for (int t : {2, 3}) {
        auto const r = is_algebraically_stable_up_to(build_g(GFamilyParams{1, 1}, t), 5);
        CHECK(r.drop_at.has_value());
    }
    CHECK(is_algebraically_stable_up_to(build_g(GFamilyParams{1, 1}, Rational(1, 2)), 4).stable_so_far());
}

TEST_CASE("comparison of three families") {
    auto const r = negative_answer_report(10);
    auto ints = [](std::vector<long> v) { return std::vector<Integer>(v.begin(), v.end()); };
    CHECK(r.intersection == ints({1, 3, 5, 7, 9}));
    CHECK(r.symmetric_difference == ints({2, 4, 6, 8, 10}));
    CHECK(r.e20_subset_of_e11);
}

}  // TEST_SUITE

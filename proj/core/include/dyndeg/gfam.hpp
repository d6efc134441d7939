#pragma once

// The family g_{a,b,T}([X,Y,Z]) = [(aX+bZ)(X-TZ) + (X-Z)Y, (X-Z)Y, (X-TZ)Z],
// whose exceptional set {a^n + b(a^{n-1} + ... + 1)} has unbounded height.

#include <cstddef>
#include <optional>
#include <vector>

#include "dyndeg/multipoly.hpp"
#include "dyndeg/ratmap.hpp"

namespace dyndeg {

struct GFamilyParams {
    Rational a, b;  // a != 0
};

/// The three forms of g_t exactly as displayed, without normalization.
std::vector<QPoly> g_forms(GFamilyParams const& p, Rational const& t);

/// Normalized g_t; degree 2 except at t = 1, where (X - Z) divides every
/// form and the degree drops to 1. Throws DegenerateParameters if a = 0.
ProjectiveMap<Rational> build_g(GFamilyParams const& p, Rational const& t);

/// e_0..e_{n_max} with e_n = a^n + b (a^{n-1} + ... + 1), i.e. e_0 = 1 and
/// e_{n+1} = a e_n + b.
std::vector<Rational> exceptional_set(GFamilyParams const& p, std::size_t n_max);

/// Least n with e_n = t, decided exactly for every rational a != 0 via
/// e_n - phi = a^n (1 - phi), phi = b / (1 - a).
std::optional<std::size_t> exceptional_index(GFamilyParams const& p, Rational const& t);

struct MarkedOrbit {
    /// Least n with g_t^n([1,0,1]) in the indeterminacy locus of g_t.
    std::optional<std::size_t> hit_at;
    std::size_t n_max = 0;
    /// X/Z along the orbit, starting with 1.
    std::vector<Rational> first_coords;
    /// t = 1: the map itself degenerates to degree 1.
    bool degenerate_map = false;
};

/// Iterates the displayed forms from [1,0,1] (no closed form involved).
MarkedOrbit orbit_marked_point(GFamilyParams const& p, Rational const& t, std::size_t n_max);

struct NegativeAnswerReport {
    std::size_t n_max = 0;
    std::vector<Integer> e11;  // E(g_{1,1,T}) within [1, n_max]
    std::vector<Integer> e12;  // E(g_{1,2,T}) within [1, n_max]
    std::vector<Integer> e20;  // E(g_{2,0,T}) within [1, n_max]
    std::vector<Integer> intersection;
    std::vector<Integer> symmetric_difference;
    std::vector<double> heights;  // log e for e in e11
    bool e20_subset_of_e11 = false;
};

NegativeAnswerReport negative_answer_report(std::size_t n_max);

}  // namespace dyndeg

#include "dyndeg/gfam.hpp"

#include <algorithm>
#include <cmath>

#include "dyndeg/fabc.hpp"

namespace dyndeg {

namespace {

GFamilyParams reduced(GFamilyParams p) {
    p.a.canonicalize();
    p.b.canonicalize();
    return p;
}

void require_nonzero_a(GFamilyParams const& p) {
    if (sgn(p.a) == 0) throw DegenerateParameters("g_{a,b,T} needs a != 0");
}

std::vector<Integer> integers_up_to(std::vector<Rational> const& values, std::size_t n_max) {
    std::vector<Integer> out;
    for (auto const& v : values) {
        if (v.get_den() == 1 && v >= 1 && v <= static_cast<unsigned long>(n_max)) out.push_back(v.get_num());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<QPoly> g_forms(GFamilyParams const& raw, Rational const& raw_t) {
    GFamilyParams const p = reduced(raw);
    Rational t = raw_t;
    t.canonicalize();
    require_nonzero_a(p);
    auto const x = QPoly::variable(3, 0);
    auto const y = QPoly::variable(3, 1);
    auto const z = QPoly::variable(3, 2);
    QPoly const x_tz = x - z * t;
    return {(x * p.a + z * p.b) * x_tz + (x - z) * y, (x - z) * y, x_tz * z};
}

ProjectiveMap<Rational> build_g(GFamilyParams const& raw, Rational const& raw_t) {
    GFamilyParams const p = reduced(raw);
    Rational t = raw_t;
    t.canonicalize();
    return ProjectiveMap<Rational>::create(g_forms(p, t));
}

std::vector<Rational> exceptional_set(GFamilyParams const& raw, std::size_t n_max) {
    GFamilyParams const p = reduced(raw);
    require_nonzero_a(p);
    std::vector<Rational> e{Rational(1)};
    while (e.size() <= n_max) e.push_back(p.a * e.back() + p.b);
    return e;
}

std::optional<std::size_t> exceptional_index(GFamilyParams const& raw, Rational const& raw_t) {
    GFamilyParams const p = reduced(raw);
    Rational t = raw_t;
    t.canonicalize();
    require_nonzero_a(p);
    if (t == 1) return 0;
    if (p.a == 1) {
        if (sgn(p.b) == 0) return std::nullopt;
        Rational const n = (t - 1) / p.b;
        if (n.get_den() != 1 || sgn(n) < 0) return std::nullopt;
        return static_cast<std::size_t>(n.get_num().get_ui());
    }
    Rational const fixed = p.b / (1 - p.a);
    Rational const base = 1 - fixed;  // e_n - fixed = a^n * base
    Rational const target = t - fixed;
    if (sgn(base) == 0 || sgn(target) == 0) return std::nullopt;
    Rational power = 1;
    bool const growing = abs(p.a) > 1;
    for (std::size_t n = 0;; ++n) {
        Rational const cur = power * base;
        if (cur == target) return n;
        if (abs(p.a) == 1) {
            if (n >= 1) return std::nullopt;
        } else if (growing ? abs(cur) > abs(target) : abs(cur) < abs(target)) {
            return std::nullopt;
        }
        power *= p.a;
    }
}

MarkedOrbit orbit_marked_point(GFamilyParams const& raw, Rational const& raw_t, std::size_t n_max) {
    GFamilyParams const p = reduced(raw);
    Rational t = raw_t;
    t.canonicalize();
    auto const forms = g_forms(p, t);
    MarkedOrbit out;
    out.n_max = n_max;
    out.degenerate_map = build_g(p, t).degree() < 2;
    ProjectivePoint<Rational> cur({1, 0, 1});
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.first_coords.push_back(sgn(cur[2]) == 0 ? Rational(0) : cur[0] / cur[2]);
        auto next = apply_forms(std::span<QPoly const>(forms), cur);
        if (!next) {
            out.hit_at = n;
            break;
        }
        cur = std::move(*next);
    }
    return out;
}

NegativeAnswerReport negative_answer_report(std::size_t n_max) {
    NegativeAnswerReport r;
    r.n_max = n_max;
    r.e11 = integers_up_to(exceptional_set({1, 1}, n_max), n_max);
    r.e12 = integers_up_to(exceptional_set({1, 2}, n_max), n_max);
    // 2^n exceeds n_max after log2(n_max) + 1 terms.
    std::size_t terms = 1;
    while ((std::size_t{1} << terms) <= n_max && terms < 62) ++terms;
    r.e20 = integers_up_to(exceptional_set({2, 0}, terms), n_max);
    std::set_intersection(r.e11.begin(), r.e11.end(), r.e12.begin(), r.e12.end(), std::back_inserter(r.intersection));
    std::set_symmetric_difference(r.e11.begin(), r.e11.end(), r.e12.begin(), r.e12.end(),
                                  std::back_inserter(r.symmetric_difference));
    for (auto const& e : r.e11) r.heights.push_back(std::log(e.get_d()));
    r.e20_subset_of_e11 = std::includes(r.e11.begin(), r.e11.end(), r.e20.begin(), r.e20.end());
    return r;
}

}  // namespace dyndeg

#include "dyndeg/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dyndeg {

namespace {

std::mutex cache_mutex;
std::map<std::size_t, ZPoly> phi_cache;

ZPoly x_power_minus_one(std::size_t n) {
    return ZPoly::term(1, Monomial::variable(0, static_cast<std::uint32_t>(n)), Integer(1)) -
           ZPoly::constant(1, Integer(1));
}

ZPoly compute_cyclotomic(std::size_t n) {
    ZPoly p = x_power_minus_one(n);
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0) p = *divide_exact(p, cyclotomic(d));
    }
    return p;
}

Integer coeff(ZPoly const& p, std::uint64_t k) {
    return p.coeff_of(Monomial::variable(0, static_cast<std::uint32_t>(k)));
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

ZPoly cyclotomic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = phi_cache.find(n); it != phi_cache.end()) return it->second;
    }
    // Computed outside the lock (it recurses); concurrent writers store the
    // same value, so the first insertion wins harmlessly.
    ZPoly p = compute_cyclotomic(n);
    std::lock_guard lock(cache_mutex);
    return phi_cache.try_emplace(n, std::move(p)).first->second;
}

ZPoly cos_min_poly(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cos_min_poly needs n >= 1");
    ZPoly const x = ZPoly::variable(1, 0);
    ZPoly const two = ZPoly::constant(1, Integer(2));
    if (n == 1) return x - two;
    if (n == 2) return x + two;

    // z^{-m} Phi_n(z) = c_m + sum_j c_{m+j} (z^j + z^{-j}) and
    // z^j + z^{-j} = P_j(w) with P_0 = 2, P_1 = w, P_j = w P_{j-1} - P_{j-2}.
    ZPoly const phi = cyclotomic(n);
    std::uint64_t const m = *phi.degree() / 2;
    ZPoly psi = ZPoly::constant(1, coeff(phi, m));
    ZPoly prev = two, cur = x;
    for (std::uint64_t j = 1; j <= m; ++j) {
        psi += cur * coeff(phi, m + j);
        ZPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return psi;
}

std::optional<std::size_t> is_root_of_unity(QPoly const& min_poly) {
    if (min_poly.num_vars() != 1) throw std::invalid_argument("expected a univariate polynomial");
    if (min_poly.is_zero() || min_poly.leading_coeff() != 1) throw std::invalid_argument("expected a monic polynomial");
    for (auto const& t : min_poly.terms()) {
        if (t.coeff.get_den() != 1) throw std::invalid_argument("expected integer coefficients");
    }
    ZPoly const p = to_integer_poly(min_poly);
    std::uint64_t const d = *p.degree();
    if (d == 0) return std::nullopt;
    for (std::uint64_t n = 1; n <= 2 * d * d; ++n) {
        if (euler_phi(n) == d && cyclotomic(n) == p) return n;
    }
    return std::nullopt;
}

std::vector<TwoCosValue> rational_two_cos_values() {
    // phi(n) >= sqrt(n/2), so deg Psi_n = 1 forces n <= 8.
    std::vector<TwoCosValue> out;
    for (std::size_t n = 1; n <= 8; ++n) {
        ZPoly const psi = cos_min_poly(n);
        if (psi.degree() == 1) out.push_back({-coeff(psi, 0), n});
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.value < b.value; });
    return out;
}

}  // namespace dyndeg

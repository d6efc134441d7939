#pragma once

// Cyclotomic polynomials Phi_n, minimal polynomials Psi_n of 2cos(2pi/n),
// and root-of-unity recognition. Results are memoized behind a lock;
// every function is safe to call concurrently.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyndeg/multipoly.hpp"

namespace dyndeg {

std::uint64_t euler_phi(std::uint64_t n);

/// Phi_n in one variable, n >= 1.
ZPoly cyclotomic(std::size_t n);

/// Psi_n, monic integer minimal polynomial of 2cos(2pi/n), n >= 1;
/// z^{phi(n)/2} Psi_n(z + 1/z) = Phi_n(z) for n >= 3.
ZPoly cos_min_poly(std::size_t n);

/// n if `min_poly` equals Phi_n for some n (searching n <= 2d^2 with
/// phi(n) = d); empty otherwise. Irreducibility is the caller's
/// responsibility. Throws std::invalid_argument unless `min_poly` is a
/// monic univariate polynomial with integer coefficients.
std::optional<std::size_t> is_root_of_unity(QPoly const& min_poly);

struct TwoCosValue {
    Integer value;       // zeta + 1/zeta
    std::size_t order;   // order of zeta
};

/// Every rational value of zeta + 1/zeta over roots of unity, ascending:
/// -2, -1, 0, 1, 2 (with orders 2, 3, 4, 6, 1). Derived from the n whose
/// Psi_n has degree 1, which can only happen for n <= 8.
std::vector<TwoCosValue> rational_two_cos_values();

}  // namespace dyndeg

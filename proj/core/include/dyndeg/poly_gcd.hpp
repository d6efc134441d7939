#pragma once

// Multivariate polynomial GCD and canonical scalings.
//
// Strategy, in order:
//   1. strip integer and monomial content;
//   2. try to certify gcd = 1 from univariate images modulo a prime
//      (an image whose leading coefficient survives bounds the degree of
//      the true gcd from above, so a constant image gcd is a proof);
//   3. homogeneous inputs are dehomogenized and the result re-homogenized;
//   4. heuristic GCD by evaluation at large integers (integer inputs);
//   5. subresultant remainder sequences with recursive content removal.
// Every result is verified or derived exactly; randomness only affects
// speed.

#include <span>

#include "dyndeg/multipoly.hpp"

namespace dyndeg {

/// Positive gcd of the integer coefficients (0 for the zero polynomial).
Integer integer_content(ZPoly const& p);

/// p divided by its integer content, with positive leading coefficient.
ZPoly primitive_part(ZPoly const& p);

/// Scales a rational polynomial to primitive integer coefficients with a
/// positive leading coefficient (graded-lex order). Zero maps to zero.
ZPoly primitive_integer(QPoly const& p);

/// The canonical scalar multiple of p: primitive integer coefficients with
/// positive leading coefficient over Q, monic over Z/pZ.
QPoly canonical_scaling(QPoly const& p);
FpPoly canonical_scaling(FpPoly const& p);

/// Greatest common divisor in Z[x...], including integer content, with
/// positive leading coefficient. gcd(p, 0) = +/-p.
ZPoly gcd(ZPoly const& p, ZPoly const& q);

/// Greatest common divisor over Q, normalized by canonical_scaling.
/// gcd(p, 0) = canonical_scaling(p); gcd(0, 0) = 0.
QPoly gcd(QPoly const& p, QPoly const& q);

/// Greatest common divisor over Z/pZ, monic.
FpPoly gcd(FpPoly const& p, FpPoly const& q);

/// GCD of a whole family; tries to certify coprimality of the family at
/// once before falling back to pairwise reduction.
QPoly gcd(std::span<QPoly const> polys);
FpPoly gcd(std::span<FpPoly const> polys);

/// p / gcd(p, p') computed with respect to the single variable of a
/// univariate polynomial.
QPoly squarefree_part(QPoly const& p);

}  // namespace dyndeg

#pragma once

// Numeric complex roots of univariate polynomials with exact coefficients
// (Aberth-Ehrlich iteration in extended precision).

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "dyndeg/coeff.hpp"

namespace dyndeg {

class RootFindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All complex roots, with multiplicity, of sum coeffs[k] x^k. The top
/// coefficient must be nonzero. Throws RootFindingError if the iteration
/// does not settle to backward-stable roots.
std::vector<std::complex<double>> polynomial_roots(std::span<Rational const> coeffs);

/// |p(z)| / sum |coeffs[k]| |z|^k, the relative backward residual.
double scaled_residual(std::span<Rational const> coeffs, std::complex<double> z);

}  // namespace dyndeg

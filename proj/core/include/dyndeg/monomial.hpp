#pragma once

// Monomial maps x_i -> prod_j x_j^{a_ij} given by a nonsingular integer
// matrix A: the degree formula D(A), sup norm, characteristic polynomial,
// a certified spectral radius and the inequalities relating them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "dyndeg/coeff.hpp"
#include "dyndeg/ratmap.hpp"

namespace dyndeg {

/// Square integer matrix, row-major rows.
using IntMatrix = std::vector<std::vector<Integer>>;

class SingularMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed quantity contradicts a proven inequality; always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SpectralRadiusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(IntMatrix const& a, IntMatrix const& b);
IntMatrix matrix_power(IntMatrix const& a, std::uint64_t e);
/// Fraction-free (Bareiss) determinant.
Integer determinant(IntMatrix const& a);
/// adj(A), so that A * adj(A) = det(A) * I.
IntMatrix adjugate(IntMatrix const& a);

class MonomialMap {
public:
    /// Throws std::invalid_argument unless `a` is square and nonempty, and
    /// SingularMatrix if det(a) = 0.
    explicit MonomialMap(IntMatrix a);

    std::size_t dimension() const noexcept { return a_.size(); }
    IntMatrix const& matrix() const noexcept { return a_; }
    Integer const& det() const noexcept { return det_; }

private:
    IntMatrix a_;
    Integer det_;
};

/// sum_j max+(-a_ij over i) + max+(row sums). Defined for any square
/// matrix; D(I) = 1.
Integer degree_D(IntMatrix const& a);
inline Integer degree_D(MonomialMap const& m) { return degree_D(m.matrix()); }

/// max |a_ij|.
Integer sup_norm(IntMatrix const& a);

/// The map on P^N in coordinates X1..XN, Z (so X, Y, Z when N = 2),
/// normalized; its degree is D(A).
ProjectiveMap<Rational> homogenize(MonomialMap const& m);

/// Coefficients of det(xI - A), highest degree first (leading 1).
std::vector<Integer> char_poly(IntMatrix const& a);

struct SpectralRadius {
    double value = 0;  // midpoint of the enclosure
    double lower = 0;  // lambda(A) >= lower, certified
    double upper = 0;  // lambda(A) < upper, certified
};

/// Max modulus of the eigenvalues with (upper - lower) <= rel_tol * lower.
/// Requires 0 < rel_tol <= 1e-3.
SpectralRadius spectral_radius(MonomialMap const& m, double rel_tol);

/// (2^{1/N} - 1) / (2 N^2).
double gamma_N(std::size_t n);

/// D(A)/(2N) <= ||A|| <= N D(A), exactly.
bool verify_norm_equivalence(MonomialMap const& m);

/// Least k in [0, N-1] with ||A^{k+1}|| (2^{1/N} - 1) <= lambda (1 + 2 rel_tol) ||A^k||.
/// Throws InvariantViolation if none exists.
std::size_t find_k_contraction(MonomialMap const& m, double rel_tol);

struct Conjecture4Check {
    bool holds = false;
    double lhs = 0;  // lambda(A)
    double rhs = 0;  // gamma_N * min_k D(A^{k+1}) / D(A^k)
};

Conjecture4Check conjecture4_check(MonomialMap const& m, double rel_tol);

/// D(A^{-1}) <= D(A)^{N-1}. Throws std::domain_error unless |det A| = 1.
bool inverse_degree_bound_check(MonomialMap const& m);

struct MEpsilonResult {
    std::optional<std::size_t> m;  // empty if not found within the cap
    std::size_t cap = 0;
    double target = 0;  // lambda - epsilon
};

/// Least m <= m_cap with (gamma_N D(A^{(k+1)m}) / D(A^{km}))^{1/m} >= lambda - epsilon
/// for every 0 <= k < N.
MEpsilonResult find_m_epsilon(MonomialMap const& m, double epsilon, double rel_tol, std::size_t m_cap = 64);

/// min over k < N of (gamma_N D(A^{(k+1)m}) / D(A^{km}))^{1/m}; the quantity
/// find_m_epsilon compares against lambda - epsilon.
double m_epsilon_lhs(MonomialMap const& m, std::size_t mm);

struct MonomialAnalysis {
    std::size_t n = 0;
    Integer d;
    Integer norm;
    std::vector<Integer> char_poly;
    SpectralRadius lambda;
    bool lemma63 = false;
    std::size_t prop64_k = 0;
    Conjecture4Check cor61;
    std::optional<bool> prop65;  // only for |det A| = 1
};

MonomialAnalysis analyze(MonomialMap const& m, double rel_tol);

/// Uniform entries in [lo, hi], redrawn until nonsingular.
IntMatrix random_nonsingular_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi);
/// Product of `steps` random elementary matrices (row additions with
/// multipliers in [-2, 2], swaps, sign flips); |det| = 1.
IntMatrix random_unimodular_matrix(std::mt19937_64& rng, std::size_t n, std::size_t steps);

}  // namespace dyndeg

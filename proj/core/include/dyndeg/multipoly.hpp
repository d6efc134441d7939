#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Terms are kept sorted in descending graded-lexicographic order with no
// zero coefficients and no repeated exponent vectors, so structural
// equality is mathematical equality. Instantiated for Rational, Integer and
// Zp coefficients (see multipoly.cpp).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dyndeg/coeff.hpp"

namespace dyndeg {

inline constexpr std::size_t max_vars = 8;

/// Thrown when operands disagree on variable count or an assignment does
/// not cover every variable.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::span<exponent_type const> exponents);

    static Monomial variable(std::size_t index, exponent_type power = 1);

    exponent_type operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, exponent_type e) noexcept;
    std::uint64_t degree() const noexcept { return degree_; }
    /// Sum of the exponents of variables [0, count).
    std::uint64_t partial_degree(std::size_t count) const noexcept;
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(Monomial const& other) const noexcept;
    Monomial operator*(Monomial const& other) const;
    /// Precondition: `other.divides(*this)`.
    Monomial operator/(Monomial const& other) const noexcept;
    /// Componentwise minimum.
    static Monomial gcd(Monomial const& a, Monomial const& b) noexcept;

    friend bool operator==(Monomial const&, Monomial const&) noexcept = default;
    /// Graded lexicographic: larger total degree first, ties broken by
    /// comparing exponents of X0, X1, ... in turn.
    friend std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::array<exponent_type, max_vars> exps_{};
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(Monomial const& m) const noexcept { return m.hash(); }
};

template <class C>
class MultiPoly {
public:
    using coeff_type = C;
    using traits = coeff_traits<C>;
    using context = typename traits::context;

    struct Term {
        Monomial mono;
        C coeff;
    };

    MultiPoly() = default;
    explicit MultiPoly(std::size_t num_vars, context ctx = {});

    static MultiPoly constant(std::size_t num_vars, C value);
    static MultiPoly variable(std::size_t num_vars, std::size_t index, context ctx = {});
    static MultiPoly term(std::size_t num_vars, Monomial mono, C value);
    /// Combines duplicate monomials, drops zeros and sorts.
    static MultiPoly from_terms(std::size_t num_vars, std::vector<Term> terms, context ctx = {});

    std::size_t num_vars() const noexcept { return num_vars_; }
    context ctx() const noexcept { return ctx_; }
    std::span<Term const> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// Total degree; std::nullopt stands for the degree of the zero
    /// polynomial (minus infinity).
    std::optional<std::uint64_t> degree() const noexcept;
    /// Largest exponent of one variable (0 for the zero polynomial).
    std::uint64_t degree_in(std::size_t var) const noexcept;
    /// Largest total degree in the first `count` variables.
    std::uint64_t partial_degree(std::size_t count) const noexcept;
    /// True if every term has the same total degree in the first `count`
    /// variables. The zero polynomial counts as homogeneous.
    bool is_homogeneous(std::size_t count) const noexcept;
    bool is_homogeneous() const noexcept { return is_homogeneous(num_vars_); }

    Term const& leading_term() const;
    C const& leading_coeff() const { return leading_term().coeff; }
    /// Coefficient of a monomial (zero if absent).
    C coeff_of(Monomial const& m) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(MultiPoly const& o);
    MultiPoly& operator-=(MultiPoly const& o);
    MultiPoly& operator*=(MultiPoly const& o) { return *this = *this * o; }
    MultiPoly& operator*=(C const& s);

    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) { return multiply(a, b); }
    friend MultiPoly operator*(MultiPoly a, C const& s) { return a *= s; }
    friend MultiPoly operator*(C const& s, MultiPoly a) { return a *= s; }

    MultiPoly pow(std::uint64_t exponent) const;
    MultiPoly derivative(std::size_t var) const;
    /// Multiplies every term by a monomial.
    MultiPoly shifted(Monomial const& m) const;

    /// Replaces variable i by assignment[i]. All assignment entries must
    /// share a variable count, which becomes the result's.
    MultiPoly substitute(std::span<MultiPoly const> assignment) const;
    /// Sets one variable to a constant; the variable count is unchanged.
    MultiPoly evaluate_var(std::size_t var, C const& value) const;
    C evaluate(std::span<C const> point) const;

    /// Same polynomial viewed in a ring with more (or fewer, if unused)
    /// variables; variable i keeps index i.
    MultiPoly with_num_vars(std::size_t num_vars) const;

    /// Coefficients with respect to one variable: entry k is the
    /// coefficient of var^k, itself free of `var`.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;
    static MultiPoly from_coefficients(std::size_t var, std::span<MultiPoly const> coeffs,
                                       std::size_t num_vars, context ctx = {});

    /// Largest monomial dividing every term (the identity for zero).
    Monomial monomial_content() const noexcept;

    template <class D, class F>
    MultiPoly<D> map_coeffs(F&& f, typename coeff_traits<D>::context dctx = {}) const {
        std::vector<typename MultiPoly<D>::Term> out;
        out.reserve(terms_.size());
        for (auto const& t : terms_) out.push_back({t.mono, f(t.coeff)});
        return MultiPoly<D>::from_terms(num_vars_, std::move(out), dctx);
    }

    friend bool operator==(MultiPoly const& a, MultiPoly const& b) {
        if (a.num_vars_ != b.num_vars_ || !(a.ctx_ == b.ctx_) || a.terms_.size() != b.terms_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
                return false;
            }
        }
        return true;
    }

    static MultiPoly multiply(MultiPoly const& a, MultiPoly const& b);

private:
    void check_compatible(MultiPoly const& o) const;
    void check_var(std::size_t var) const;

    std::size_t num_vars_ = 0;
    context ctx_{};
    std::vector<Term> terms_;
};

/// Exact quotient a/b, or std::nullopt if b does not divide a. Over the
/// integers the quotient must also have integer coefficients.
template <class C>
std::optional<MultiPoly<C>> divide_exact(MultiPoly<C> const& a, MultiPoly<C> const& b);

/// Univariate helper: builds sum coeffs[k] * x^k in a one-variable ring.
template <class C>
MultiPoly<C> univariate(std::span<C const> coeffs, typename coeff_traits<C>::context ctx = {});

using QPoly = MultiPoly<Rational>;
using ZPoly = MultiPoly<Integer>;
using FpPoly = MultiPoly<Zp>;

/// Reduces a rational polynomial modulo p. Throws std::domain_error if p
/// divides a denominator.
FpPoly reduce_mod_p(QPoly const& p, std::uint64_t modulus);
ZPoly to_integer_poly(QPoly const& p);
QPoly to_rational_poly(ZPoly const& p);

/// A polynomial every term of which has the same total degree in the
/// first `coord_vars` variables (any further variables are parameters).
template <class C>
class HomogeneousForm {
public:
    HomogeneousForm() = default;
    /// Throws std::invalid_argument if `poly` is not homogeneous in the
    /// coordinate variables.
    HomogeneousForm(MultiPoly<C> poly, std::size_t coord_vars);

    MultiPoly<C> const& poly() const noexcept { return poly_; }
    std::size_t coord_vars() const noexcept { return coord_vars_; }
    /// Degree in the coordinate variables; std::nullopt for zero.
    std::optional<std::uint64_t> degree() const noexcept;
    bool is_zero() const noexcept { return poly_.is_zero(); }

    friend bool operator==(HomogeneousForm const&, HomogeneousForm const&) = default;

private:
    MultiPoly<C> poly_;
    std::size_t coord_vars_ = 0;
};

extern template class MultiPoly<Rational>;
extern template class MultiPoly<Integer>;
extern template class MultiPoly<Zp>;
extern template class HomogeneousForm<Rational>;
extern template class HomogeneousForm<Zp>;

}  // namespace dyndeg

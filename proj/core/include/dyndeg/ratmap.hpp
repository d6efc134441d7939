#pragma once

// Rational self-maps of projective space given by homogeneous coordinate
// forms, kept normalized: the forms have no common factor and a canonical
// joint scaling, so two maps are equal iff their coordinates are.
//
// The ring of a map with N+1 coordinates has variables X0..XN first,
// optionally followed by symbolic parameters (e.g. a, b, c) that are left
// untouched by composition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dyndeg/multipoly.hpp"

namespace dyndeg {

/// Malformed map input: inhomogeneous forms, unequal degrees, all forms
/// zero, or a constant map.
class InvalidMap : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class C>
class ProjectivePoint {
public:
    /// Scales so that the first nonzero coordinate is 1. Throws
    /// std::invalid_argument if every coordinate is zero.
    explicit ProjectivePoint(std::vector<C> coords);

    std::span<C const> coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    C const& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(ProjectivePoint const&, ProjectivePoint const&) = default;

private:
    std::vector<C> coords_;
};

template <class C>
class ProjectiveMap {
public:
    using poly_type = MultiPoly<C>;

    ProjectiveMap() = default;

    /// Validates and normalizes. Each coordinate must live in a ring of
    /// coords.size() + num_params variables.
    static ProjectiveMap create(std::vector<poly_type> coords, std::size_t num_params = 0);
    static ProjectiveMap identity(std::size_t dimension, std::size_t num_params = 0,
                                  typename poly_type::context ctx = {});

    std::size_t dimension() const noexcept { return coords_.size() - 1; }
    std::size_t coord_vars() const noexcept { return coords_.size(); }
    std::size_t num_params() const noexcept { return num_params_; }
    std::size_t num_vars() const noexcept { return coords_.front().num_vars(); }
    std::uint64_t degree() const noexcept { return degree_; }
    std::span<poly_type const> coords() const noexcept { return coords_; }
    /// Largest term count among the coordinates.
    std::size_t max_terms() const noexcept;

    friend bool operator==(ProjectiveMap const&, ProjectiveMap const&) = default;

private:
    std::vector<poly_type> coords_;
    std::size_t num_params_ = 0;
    std::uint64_t degree_ = 0;
};

/// f o g, normalized. Throws ArityMismatch on different dimensions or
/// parameter sets.
template <class C>
ProjectiveMap<C> compose(ProjectiveMap<C> const& f, ProjectiveMap<C> const& g);

/// f^n for n >= 1 by repeated f o f^k.
template <class C>
ProjectiveMap<C> iterate(ProjectiveMap<C> const& f, std::size_t n);

struct DegreeSequence {
    /// degrees[n-1] = deg(f^n).
    std::vector<std::uint64_t> degrees;
    std::size_t n_max = 0;
    /// Set when the term cap stopped the computation before n_max.
    bool truncated = false;

    std::uint64_t operator[](std::size_t n) const { return degrees.at(n - 1); }
    std::size_t computed() const noexcept { return degrees.size(); }
};

struct IterationLimits {
    /// Maximum terms in any coordinate of an iterate.
    std::size_t max_terms = default_max_terms();

    /// 200000, or the value of DYNDEG_MAX_TERMS when set to a positive
    /// integer.
    static std::size_t default_max_terms();
};

template <class C>
DegreeSequence degree_sequence(ProjectiveMap<C> const& f, std::size_t n_max, IterationLimits limits = {});

struct DynamicalDegreeEstimate {
    double root_estimate = 0;   // deg(f^n)^(1/n)
    double ratio_estimate = 0;  // deg(f^n) / deg(f^(n-1))
};

/// Uses the last two computed entries. Throws std::invalid_argument with
/// fewer than two.
DynamicalDegreeEstimate dyndeg_estimate(DegreeSequence const& seq);

struct StabilityReport {
    /// Least n with deg(f^n) < deg(f)^n, if one was seen.
    std::optional<std::size_t> drop_at;
    /// Number of iterates actually checked.
    std::size_t checked = 0;
    bool truncated = false;

    bool stable_so_far() const noexcept { return !drop_at; }
};

template <class C>
StabilityReport is_algebraically_stable_up_to(ProjectiveMap<C> const& f, std::size_t n_max,
                                              IterationLimits limits = {});

/// Evaluates forms at a point with no normalization; std::nullopt means
/// every form vanishes there (the point is indeterminate).
template <class C>
std::optional<ProjectivePoint<C>> apply_forms(std::span<MultiPoly<C> const> forms, ProjectivePoint<C> const& p);

/// f(P), or std::nullopt if P lies in the indeterminacy locus of f. The
/// map must have no symbolic parameters.
template <class C>
std::optional<ProjectivePoint<C>> apply(ProjectiveMap<C> const& f, ProjectivePoint<C> const& p);

template <class C>
struct Orbit {
    /// P, f(P), ...; when the orbit hits I(f) the offending point is last.
    std::vector<ProjectivePoint<C>> points;
    /// Index n with f^n(P) in I(f), if reached.
    std::optional<std::size_t> hit_indeterminacy;

    bool completed() const noexcept { return !hit_indeterminacy; }
};

template <class C>
Orbit<C> orbit(ProjectiveMap<C> const& f, ProjectivePoint<C> const& p, std::size_t n_max);

/// Jacobian criterion in characteristic zero.
bool dominance_check(ProjectiveMap<Rational> const& f);

extern template class ProjectivePoint<Rational>;
extern template class ProjectivePoint<Zp>;
extern template class ProjectiveMap<Rational>;
extern template class ProjectiveMap<Zp>;

}  // namespace dyndeg

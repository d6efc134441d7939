#pragma once

// The family f_{a,b,c}([X,Y,Z]) = [XY, XY + aZ^2, bYZ + cZ^2]: explicit
// inverse and fibres, the V_n recurrence, the stability classifier over Q
// and modulo primes, and exceptional loci of one-parameter families.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyndeg/multipoly.hpp"
#include "dyndeg/ratmap.hpp"

namespace dyndeg {

/// Some parameter that must be nonzero is zero.
class DegenerateParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FabcParams {
    Rational a, b, c;
};

/// Ring X, Y, Z, a, b, c used for symbolic computations.
inline constexpr std::size_t fabc_symbolic_vars = 6;
std::vector<std::string> fabc_symbolic_names();

ProjectiveMap<Rational> build_map(FabcParams const& p);
/// a, b, c as parameters (variables 3, 4, 5).
ProjectiveMap<Rational> build_map_symbolic();
/// Reduction modulo p of integer parameters. Throws DegenerateParameters
/// if p divides abc.
ProjectiveMap<Zp> build_map_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p);

/// The map induced by (ab^2 X(Y-X), (cX-cY+aZ)^2, b(cX-cY+aZ)(Y-X)).
ProjectiveMap<Rational> inverse_map(FabcParams const& p);
ProjectiveMap<Rational> inverse_map_symbolic();

/// Points where all three forms vanish, found by elimination and then
/// checked with apply().
std::vector<ProjectivePoint<Rational>> indeterminacy_points(FabcParams const& p);

/// Jacobian determinant of the coordinate forms (-2abYZ^2).
QPoly critical_locus(FabcParams const& p);
QPoly critical_locus_symbolic();

struct Preimage {
    enum class Kind { Point, LineMinusPoints, Empty };
    Kind kind = Kind::Empty;
    std::optional<ProjectivePoint<Rational>> point;        // Kind::Point
    std::optional<QPoly> line;                             // Kind::LineMinusPoints
    std::vector<ProjectivePoint<Rational>> removed;        // Kind::LineMinusPoints
    std::string description;
};

Preimage preimage(FabcParams const& p, ProjectivePoint<Rational> const& q);

/// V_0..V_{n_max} from V_0 = 1, V_1 = c, V_{n+1} = c V_n + ab V_{n-1}.
std::vector<Rational> vn_sequence(FabcParams const& p, std::size_t n_max);
std::vector<Zp> vn_sequence_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p,
                                  std::size_t n_max);

struct StabilityVerdict {
    enum class Status { Stable, Unstable, Degenerate };
    Status status = Status::Stable;
    std::optional<std::size_t> zeta_order;       // Unstable
    std::optional<std::size_t> vanishing_index;  // Unstable: V_m = 0
    std::string reason;                          // Degenerate
};

char const* to_string(StabilityVerdict::Status s);

/// Unstable iff c^2/(ab) is -1, -2 or -3 (orders 3, 4, 6); c^2 + 4ab = 0 is
/// Stable. The witness V_m = 0 is confirmed by the recurrence.
StabilityVerdict classify(FabcParams const& p);

struct ModPResult {
    enum class Kind { ExceptionalAt, NotFoundWithinCap, DegenerateModP };
    Kind kind = Kind::NotFoundWithinCap;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> m;  // least m >= 1 with V_m = 0 mod p
};

/// Throws std::invalid_argument unless p is prime. search_cap 0 means p^2.
ModPResult classify_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p,
                          std::uint64_t search_cap = 0);

// --- one-parameter families ---------------------------------------------------------

/// a(T), b(T), c(T) in one variable.
struct FamilyParams {
    QPoly a, b, c;
};

/// Parses three polynomials in T.
FamilyParams parse_family(std::string const& a, std::string const& b, std::string const& c);
std::string format_family_poly(QPoly const& p);

struct GenericStability {
    enum class Kind { GenericallyStable, GenericallyUnstable, Degenerate };
    Kind kind = Kind::GenericallyStable;
    std::optional<Rational> kappa;  // c^2/(ab) when constant
    std::optional<std::size_t> zeta_order;
};

GenericStability family_generic_stability(FamilyParams const& f);

struct LocusEntry {
    std::size_t n = 0;
    ZPoly poly;  // p_n(T), primitive, positive leading coefficient
    std::vector<std::complex<double>> roots;
    std::vector<double> heights;
};

struct ExceptionalLocus {
    std::size_t truncation = 0;
    std::vector<LocusEntry> entries;
    std::vector<std::complex<double>> degenerate_params;  // roots of a b c
    ZPoly zeta_one_locus;                                  // c^2 + 4ab, excluded
};

/// p_n(T) for 3 <= n <= n_max: the primitive numerator of
/// Psi_n(-2 - c^2/(ab)) with common factors of abc and c^2 + 4ab removed.
/// Throws std::domain_error if some numerator vanishes identically.
ExceptionalLocus family_exceptional_locus(FamilyParams const& f, std::size_t n_max);

/// |Psi_n(w)| / max(1, sum |psi_k| |w|^k) at w = -2 - c(t)^2/(a(t)b(t)).
double locus_residual(FamilyParams const& f, std::size_t n, std::complex<double> t);

struct IntersectionPair {
    std::size_t n1 = 0, n2 = 0;
    ZPoly common;  // gcd of the squarefree defining polynomials
};

struct IntersectionReport {
    std::size_t truncation = 0;
    std::size_t size1 = 0, size2 = 0;
    std::size_t intersection = 0;
    std::size_t symmetric_difference = 0;
    std::vector<IntersectionPair> pairs;  // only pairs with a common root
    bool phi_equal = false;               // c1^2 a2 b2 == c2^2 a1 b1
};

IntersectionReport unlikely_intersection_explorer(FamilyParams const& f1, FamilyParams const& f2,
                                                  std::size_t n_max);

/// psi(z) = -(z + 1)^2 / z; f_{a,b,c} is unstable iff c^2/(ab) = psi(zeta)
/// for a root of unity zeta != 1.
Rational psi_map(Rational const& z);

}  // namespace dyndeg

#include "dyndeg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dyndeg {

namespace {

using cld = std::complex<long double>;

constexpr int kMaxIterations = 2000;
constexpr long double kStepTol = 1e-17L;
constexpr long double kAcceptResidual = 1e-13L;

long double to_ld(Rational const& q) {
    // Ratio of doubles loses nothing that matters at the sizes in use and
    // avoids overflow when numerator and denominator are both huge.
    long num_exp = 0, den_exp = 0;
    double const n = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
    double const d = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
    return std::ldexp(static_cast<long double>(n) / d, static_cast<int>(num_exp - den_exp));
}

void horner(std::vector<cld> const& a, cld z, cld& p, cld& dp) {
    p = a.back();
    dp = 0;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

long double residual(std::vector<cld> const& a, cld z) {
    cld p = a.back();
    long double scale = std::abs(a.back());
    long double const r = std::abs(z);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        p = p * z + a[k];
        scale = scale * r + std::abs(a[k]);
    }
    return scale == 0 ? 0 : std::abs(p) / scale;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(std::span<Rational const> coeffs) {
    if (coeffs.empty() || sgn(coeffs.back()) == 0) {
        throw std::invalid_argument("polynomial_roots needs a nonzero leading coefficient");
    }
    std::vector<std::complex<double>> out;
    std::size_t low = 0;
    while (sgn(coeffs[low]) == 0) {
        out.emplace_back(0.0, 0.0);
        ++low;
    }
    std::size_t const n = coeffs.size() - 1 - low;
    if (n == 0) return out;

    long double const lead = to_ld(coeffs.back());
    std::vector<cld> a(n + 1);
    for (std::size_t k = 0; k <= n; ++k) a[k] = to_ld(coeffs[k + low]) / lead;

    // Fujiwara bound on the root moduli.
    long double bound = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        long double const c = std::abs(a[n - k]) / (k == n ? 2.0L : 1.0L);
        bound = std::max(bound, std::pow(c, 1.0L / static_cast<long double>(k)));
    }
    bound = 2 * bound;
    long double const r0 = std::max(bound / 2, 1e-6L);

    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double const theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                      static_cast<long double>(n) +
                                  0.4L;
        z[k] = std::polar(r0, theta);
    }

    // A root is frozen once its correction is negligible or its backward
    // residual is at rounding level; further sweeps would only jitter it.
    long double const frozen_residual = 16 * static_cast<long double>(n) * std::numeric_limits<long double>::epsilon();
    std::vector<bool> frozen(n, false);
    std::size_t active = n;
    for (int it = 0; it < kMaxIterations && active > 0; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            cld p, dp;
            horner(a, z[i], p, dp);
            if (p == cld(0) || residual(a, z[i]) <= frozen_residual) {
                frozen[i] = true;
                --active;
                continue;
            }
            cld const ratio = p / dp;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            }
            cld const w = ratio / (1.0L - ratio * sum);
            z[i] -= w;
            if (std::abs(w) <= kStepTol * std::max(1.0L, std::abs(z[i]))) {
                frozen[i] = true;
                --active;
            }
        }
    }
    for (auto const& root : z) {
        if (!std::isfinite(root.real()) || !std::isfinite(root.imag()) || residual(a, root) > kAcceptResidual) {
            throw RootFindingError("root iteration did not converge");
        }
        out.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
    }
    return out;
}

double scaled_residual(std::span<Rational const> coeffs, std::complex<double> z) {
    std::vector<cld> a(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) a[k] = to_ld(coeffs[k]);
    if (a.empty()) return 0;
    return static_cast<double>(residual(a, cld(z.real(), z.imag())));
}

}  // namespace dyndeg

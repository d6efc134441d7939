#include "dyndeg/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

namespace dyndeg {

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::span<exponent_type const> exponents) {
    if (exponents.size() > max_vars) {
        throw ArityMismatch("at most " + std::to_string(max_vars) + " variables are supported");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        exps_[i] = exponents[i];
        degree_ += exponents[i];
    }
}

Monomial Monomial::variable(std::size_t index, exponent_type power) {
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, exponent_type e) noexcept {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

std::uint64_t Monomial::partial_degree(std::size_t count) const noexcept {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < count && i < max_vars; ++i) d += exps_[i];
    return d;
}

bool Monomial::divides(Monomial const& other) const noexcept {
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(Monomial const& other) const {
    Monomial m;
    for (std::size_t i = 0; i < max_vars; ++i) {
        std::uint64_t const e = std::uint64_t{exps_[i]} + other.exps_[i];
        if (e > std::numeric_limits<exponent_type>::max()) {
            throw std::overflow_error("monomial exponent overflow");
        }
        m.exps_[i] = static_cast<exponent_type>(e);
    }
    m.degree_ = degree_ + other.degree_;
    return m;
}

Monomial Monomial::operator/(Monomial const& other) const noexcept {
    Monomial m;
    for (std::size_t i = 0; i < max_vars; ++i) m.exps_[i] = exps_[i] - other.exps_[i];
    m.degree_ = degree_ - other.degree_;
    return m;
}

Monomial Monomial::gcd(Monomial const& a, Monomial const& b) noexcept {
    Monomial m;
    for (std::size_t i = 0; i < max_vars; ++i) {
        m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        m.degree_ += m.exps_[i];
    }
    return m;
}

std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto e : exps_) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

// --- coefficient helpers ----------------------------------------------------

namespace {

bool coeff_divide(Rational const& a, Rational const& b, Rational& out) {
    out = a / b;
    return true;
}

bool coeff_divide(Integer const& a, Integer const& b, Integer& out) {
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

bool coeff_divide(Zp const& a, Zp const& b, Zp& out) {
    out = a / b;
    return true;
}

template <class C>
C coeff_pow(C base, std::uint64_t e, typename coeff_traits<C>::context ctx) {
    C acc = coeff_traits<C>::from_int(ctx, 1);
    while (e != 0) {
        if (e & 1U) acc *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return acc;
}

template <class C>
bool term_greater(typename MultiPoly<C>::Term const& a, typename MultiPoly<C>::Term const& b) {
    return a.mono > b.mono;
}

}  // namespace

// --- MultiPoly ----------------------------------------------------------------

template <class C>
MultiPoly<C>::MultiPoly(std::size_t num_vars, context ctx) : num_vars_(num_vars), ctx_(ctx) {
    if (num_vars > max_vars) {
        throw ArityMismatch("at most " + std::to_string(max_vars) + " variables are supported");
    }
}

template <class C>
MultiPoly<C> MultiPoly<C>::constant(std::size_t num_vars, C value) {
    traits::canonicalize(value);
    MultiPoly p(num_vars, traits::context_of(value));
    if (!traits::is_zero(value)) p.terms_.push_back({Monomial{}, std::move(value)});
    return p;
}

template <class C>
MultiPoly<C> MultiPoly<C>::variable(std::size_t num_vars, std::size_t index, context ctx) {
    MultiPoly p(num_vars, ctx);
    p.check_var(index);
    p.terms_.push_back({Monomial::variable(index), traits::from_int(ctx, 1)});
    return p;
}

template <class C>
MultiPoly<C> MultiPoly<C>::term(std::size_t num_vars, Monomial mono, C value) {
    traits::canonicalize(value);
    MultiPoly p(num_vars, traits::context_of(value));
    for (std::size_t i = num_vars; i < max_vars; ++i) {
        if (mono[i] != 0) throw ArityMismatch("monomial uses a variable outside the ring");
    }
    if (!traits::is_zero(value)) p.terms_.push_back({mono, std::move(value)});
    return p;
}

template <class C>
MultiPoly<C> MultiPoly<C>::from_terms(std::size_t num_vars, std::vector<Term> terms, context ctx) {
    MultiPoly p(num_vars, ctx);
    for (auto& t : terms) {
        traits::canonicalize(t.coeff);
        for (std::size_t i = num_vars; i < max_vars; ++i) {
            if (t.mono[i] != 0) throw ArityMismatch("monomial uses a variable outside the ring");
        }
    }
    std::sort(terms.begin(), terms.end(), term_greater<C>);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
}

template <class C>
bool MultiPoly<C>::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

template <class C>
std::optional<std::uint64_t> MultiPoly<C>::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
}

template <class C>
std::uint64_t MultiPoly<C>::degree_in(std::size_t var) const noexcept {
    std::uint64_t d = 0;
    for (auto const& t : terms_) d = std::max<std::uint64_t>(d, t.mono[var]);
    return d;
}

template <class C>
std::uint64_t MultiPoly<C>::partial_degree(std::size_t count) const noexcept {
    std::uint64_t d = 0;
    for (auto const& t : terms_) d = std::max(d, t.mono.partial_degree(count));
    return d;
}

template <class C>
bool MultiPoly<C>::is_homogeneous(std::size_t count) const noexcept {
    if (terms_.empty()) return true;
    auto const d = terms_.front().mono.partial_degree(count);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](Term const& t) { return t.mono.partial_degree(count) == d; });
}

template <class C>
typename MultiPoly<C>::Term const& MultiPoly<C>::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

template <class C>
C MultiPoly<C>::coeff_of(Monomial const& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](Term const& t, Monomial const& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return traits::zero(ctx_);
}

template <class C>
void MultiPoly<C>::check_compatible(MultiPoly const& o) const {
    if (num_vars_ != o.num_vars_) {
        throw ArityMismatch("polynomials over " + std::to_string(num_vars_) + " and " +
                            std::to_string(o.num_vars_) + " variables");
    }
    if (!(ctx_ == o.ctx_)) throw DomainMismatch("polynomials over different coefficient fields");
}

template <class C>
void MultiPoly<C>::check_var(std::size_t var) const {
    if (var >= num_vars_) {
        throw ArityMismatch("variable index " + std::to_string(var) + " out of range");
    }
}

template <class C>
MultiPoly<C> MultiPoly<C>::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator+=(MultiPoly const& o) {
    check_compatible(o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
            merged.push_back(o.terms_[j++]);
        } else {
            C sum = terms_[i].coeff + o.terms_[j].coeff;
            if (!traits::is_zero(sum)) merged.push_back({terms_[i].mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator-=(MultiPoly const& o) {
    return *this += -o;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator*=(C const& s) {
    if (!terms_.empty() && !(traits::context_of(s) == ctx_)) {
        throw DomainMismatch("scalar from a different coefficient field");
    }
    if (traits::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    C scale = s;
    traits::canonicalize(scale);
    for (auto& t : terms_) t.coeff *= scale;
    return *this;
}

template <class C>
MultiPoly<C> MultiPoly<C>::multiply(MultiPoly const& a, MultiPoly const& b) {
    a.check_compatible(b);
    MultiPoly out(a.num_vars_, a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    MultiPoly const* small = &a;
    MultiPoly const* large = &b;
    if (small->terms_.size() > large->terms_.size()) std::swap(small, large);

    if (small->terms_.size() == 1) {
        // Multiplying by a single term preserves the order.
        auto const& t = small->terms_.front();
        out.terms_.reserve(large->terms_.size());
        for (auto const& u : large->terms_) out.terms_.push_back({u.mono * t.mono, u.coeff * t.coeff});
        return out;
    }

    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(small->terms_.size() * large->terms_.size() / 2 + 16);
    C prod = traits::zero(a.ctx_);
    for (auto const& s : small->terms_) {
        for (auto const& l : large->terms_) {
            prod = s.coeff;
            prod *= l.coeff;
            auto [it, inserted] = acc.try_emplace(s.mono * l.mono, prod);
            if (!inserted) it->second += prod;
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!traits::is_zero(c)) out.terms_.push_back({m, std::move(c)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_greater<C>);
    return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::pow(std::uint64_t exponent) const {
    MultiPoly acc = constant(num_vars_, traits::from_int(ctx_, 1));
    MultiPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) acc = acc * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return acc;
}

template <class C>
MultiPoly<C> MultiPoly<C>::derivative(std::size_t var) const {
    check_var(var);
    MultiPoly out(num_vars_, ctx_);
    for (auto const& t : terms_) {
        auto const e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        C c = t.coeff * traits::from_int(ctx_, static_cast<long>(e));
        if (!traits::is_zero(c)) out.terms_.push_back({m, std::move(c)});
    }
    return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::shifted(Monomial const& m) const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.mono = t.mono * m;
    return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::substitute(std::span<MultiPoly const> assignment) const {
    if (assignment.size() != num_vars_) {
        throw ArityMismatch("substitution needs " + std::to_string(num_vars_) + " polynomials, got " +
                            std::to_string(assignment.size()));
    }
    std::size_t target_vars = 0;
    context tctx = ctx_;
    if (!assignment.empty()) {
        target_vars = assignment.front().num_vars_;
        tctx = assignment.front().ctx_;
        for (auto const& a : assignment) {
            if (a.num_vars_ != target_vars) throw ArityMismatch("substitution images over different rings");
            if (!(a.ctx_ == tctx)) throw DomainMismatch("substitution images over different fields");
        }
    }
    if (!(tctx == ctx_)) throw DomainMismatch("substitution images over a different field");

    std::vector<std::vector<MultiPoly>> powers(num_vars_);
    auto power_of = [&](std::size_t var, std::uint32_t e) -> MultiPoly const& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(constant(target_vars, traits::from_int(tctx, 1)));
        while (cache.size() <= e) cache.push_back(cache.back() * assignment[var]);
        return cache[e];
    };

    MultiPoly out(target_vars, tctx);
    for (auto const& t : terms_) {
        MultiPoly prod = constant(target_vars, t.coeff);
        for (std::size_t v = 0; v < num_vars_ && !prod.is_zero(); ++v) {
            if (t.mono[v] != 0) prod = prod * power_of(v, t.mono[v]);
        }
        out += prod;
    }
    return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::evaluate_var(std::size_t var, C const& value) const {
    check_var(var);
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<C> pw{traits::from_int(ctx_, 1)};
    for (auto const& t : terms_) {
        auto const e = t.mono[var];
        while (pw.size() <= e) pw.push_back(pw.back() * value);
        Monomial m = t.mono;
        m.set(var, 0);
        out.push_back({m, t.coeff * pw[e]});
    }
    return from_terms(num_vars_, std::move(out), ctx_);
}

template <class C>
C MultiPoly<C>::evaluate(std::span<C const> point) const {
    if (point.size() != num_vars_) {
        throw ArityMismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(num_vars_));
    }
    C sum = traits::zero(ctx_);
    for (auto const& t : terms_) {
        C prod = t.coeff;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (t.mono[v] != 0) prod *= coeff_pow(point[v], t.mono[v], ctx_);
        }
        sum += prod;
    }
    return sum;
}

template <class C>
MultiPoly<C> MultiPoly<C>::with_num_vars(std::size_t num_vars) const {
    MultiPoly out(num_vars, ctx_);
    for (auto const& t : terms_) {
        for (std::size_t i = num_vars; i < max_vars; ++i) {
            if (t.mono[i] != 0) throw ArityMismatch("polynomial uses a variable that would be dropped");
        }
    }
    out.terms_ = terms_;
    return out;
}

template <class C>
std::vector<MultiPoly<C>> MultiPoly<C>::coefficients_in(std::size_t var) const {
    check_var(var);
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(num_vars_, ctx_));
    for (auto const& t : terms_) {
        Monomial m = t.mono;
        auto const e = m[var];
        m.set(var, 0);
        // Every term in bucket e loses the same exponent, so order survives.
        out[e].terms_.push_back({m, t.coeff});
    }
    return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::from_coefficients(std::size_t var, std::span<MultiPoly const> coeffs,
                                             std::size_t num_vars, context ctx) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (auto const& t : coeffs[k].terms_) {
            if (t.mono[var] != 0) throw std::invalid_argument("coefficient depends on the main variable");
            Monomial m = t.mono;
            m.set(var, static_cast<Monomial::exponent_type>(k));
            terms.push_back({m, t.coeff});
        }
    }
    return from_terms(num_vars, std::move(terms), ctx);
}

template <class C>
Monomial MultiPoly<C>::monomial_content() const noexcept {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.front().mono;
    for (auto const& t : terms_) {
        g = Monomial::gcd(g, t.mono);
        if (g.is_one()) break;
    }
    return g;
}

// --- free functions -----------------------------------------------------------

template <class C>
std::optional<MultiPoly<C>> divide_exact(MultiPoly<C> const& a, MultiPoly<C> const& b) {
    using traits = coeff_traits<C>;
    if (a.num_vars() != b.num_vars()) throw ArityMismatch("division of polynomials over different rings");
    if (!(a.ctx() == b.ctx())) throw DomainMismatch("division over different coefficient fields");
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return MultiPoly<C>(a.num_vars(), a.ctx());
    for (std::size_t v = 0; v < a.num_vars(); ++v) {
        if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
    }

    auto const& lt = b.leading_term();
    if (b.size() == 1) {
        std::vector<typename MultiPoly<C>::Term> q;
        q.reserve(a.size());
        for (auto const& t : a.terms()) {
            if (!lt.mono.divides(t.mono)) return std::nullopt;
            C c = traits::zero(a.ctx());
            if (!coeff_divide(t.coeff, lt.coeff, c)) return std::nullopt;
            q.push_back({t.mono / lt.mono, std::move(c)});
        }
        return MultiPoly<C>::from_terms(a.num_vars(), std::move(q), a.ctx());
    }

    std::map<Monomial, C, std::greater<>> rem;
    for (auto const& t : a.terms()) rem.emplace(t.mono, t.coeff);
    std::vector<typename MultiPoly<C>::Term> quotient;
    auto const tail = b.terms().subspan(1);
    C qc = traits::zero(a.ctx());
    C prod = traits::zero(a.ctx());
    while (!rem.empty()) {
        auto head = rem.begin();
        if (!lt.mono.divides(head->first)) return std::nullopt;
        if (!coeff_divide(head->second, lt.coeff, qc)) return std::nullopt;
        Monomial const qm = head->first / lt.mono;
        rem.erase(head);
        for (auto const& t : tail) {
            prod = qc;
            prod *= t.coeff;
            auto [it, inserted] = rem.try_emplace(qm * t.mono, traits::zero(a.ctx()));
            it->second -= prod;
            if (traits::is_zero(it->second)) rem.erase(it);
        }
        quotient.push_back({qm, qc});
    }
    return MultiPoly<C>::from_terms(a.num_vars(), std::move(quotient), a.ctx());
}

template <class C>
MultiPoly<C> univariate(std::span<C const> coeffs, typename coeff_traits<C>::context ctx) {
    std::vector<typename MultiPoly<C>::Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial m;
        m.set(0, static_cast<Monomial::exponent_type>(k));
        terms.push_back({m, coeffs[k]});
    }
    return MultiPoly<C>::from_terms(1, std::move(terms), ctx);
}

FpPoly reduce_mod_p(QPoly const& p, std::uint64_t modulus) {
    return p.map_coeffs<Zp>(
        [&](Rational const& q) {
            Zp den = Zp::from_integer(q.get_den(), modulus);
            if (den.is_zero()) throw std::domain_error("denominator divisible by the modulus");
            return Zp::from_integer(q.get_num(), modulus) / den;
        },
        coeff_traits<Zp>::context{modulus});
}

ZPoly to_integer_poly(QPoly const& p) {
    return p.map_coeffs<Integer>([](Rational const& q) {
        if (q.get_den() != 1) throw std::domain_error("non-integer coefficient");
        return Integer(q.get_num());
    });
}

QPoly to_rational_poly(ZPoly const& p) {
    return p.map_coeffs<Rational>([](Integer const& z) { return Rational(z); });
}

template <class C>
HomogeneousForm<C>::HomogeneousForm(MultiPoly<C> poly, std::size_t coord_vars)
    : poly_(std::move(poly)), coord_vars_(coord_vars) {
    if (coord_vars > poly_.num_vars()) throw ArityMismatch("more coordinate variables than ring variables");
    if (!poly_.is_homogeneous(coord_vars)) throw std::invalid_argument("form is not homogeneous");
}

template <class C>
std::optional<std::uint64_t> HomogeneousForm<C>::degree() const noexcept {
    if (poly_.is_zero()) return std::nullopt;
    return poly_.terms().front().mono.partial_degree(coord_vars_);
}

template class MultiPoly<Rational>;
template class MultiPoly<Integer>;
template class MultiPoly<Zp>;
template class HomogeneousForm<Rational>;
template class HomogeneousForm<Zp>;

template std::optional<QPoly> divide_exact(QPoly const&, QPoly const&);
template std::optional<ZPoly> divide_exact(ZPoly const&, ZPoly const&);
template std::optional<FpPoly> divide_exact(FpPoly const&, FpPoly const&);
template QPoly univariate(std::span<Rational const>, coeff_traits<Rational>::context);
template ZPoly univariate(std::span<Integer const>, coeff_traits<Integer>::context);
template FpPoly univariate(std::span<Zp const>, coeff_traits<Zp>::context);

}  // namespace dyndeg

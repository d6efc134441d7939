#include "dyndeg/coeff.hpp"

#include <cctype>

namespace dyndeg {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto const slash = s.find('/');
    auto valid_int = [](std::string const& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && part[i] == '-') ++i;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };

    Rational q;
    if (slash == std::string::npos) {
        if (!valid_int(s, true)) throw std::invalid_argument("malformed rational: " + s);
        q = Rational(Integer(s));
    } else {
        auto const num = s.substr(0, slash);
        auto const den = s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false)) {
            throw std::invalid_argument("malformed rational: " + s);
        }
        Integer d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        q = Rational(Integer(num), d);
        q.canonicalize();
    }
    return q;
}

std::string to_string(Rational const& q) { return q.get_str(); }
std::string to_string(Integer const& z) { return z.get_str(); }

bool is_probable_prime(std::uint64_t n) {
    Integer z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

Zp::Zp(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > max_modulus) {
        throw std::invalid_argument("prime field modulus out of range: " + std::to_string(modulus));
    }
    auto const m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

Zp Zp::from_integer(Integer const& value, std::uint64_t modulus) {
    Integer m(std::to_string(modulus));
    Integer r = value % m;
    if (r < 0) r += m;
    Zp out(0, modulus);
    out.value_ = std::stoull(r.get_str());
    return out;
}

void Zp::check_same_field(Zp const& o) const {
    if (modulus_ != o.modulus_) {
        throw DomainMismatch("prime field elements with different moduli");
    }
}

Zp& Zp::operator+=(Zp const& o) {
    check_same_field(o);
    value_ = value_ >= modulus_ - o.value_ ? value_ - (modulus_ - o.value_) : value_ + o.value_;
    return *this;
}

Zp& Zp::operator-=(Zp const& o) {
    check_same_field(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
    return *this;
}

Zp& Zp::operator*=(Zp const& o) {
    check_same_field(o);
    value_ = mul_mod(value_, o.value_, modulus_);
    return *this;
}

Zp Zp::negated() const noexcept {
    Zp out = *this;
    out.value_ = value_ == 0 ? 0 : modulus_ - value_;
    return out;
}

Zp Zp::pow(std::uint64_t e) const {
    Zp base = *this;
    Zp acc(1, modulus_);
    while (e != 0) {
        if (e & 1U) acc *= base;
        base *= base;
        e >>= 1U;
    }
    return acc;
}

Zp Zp::inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero in prime field");
    // Extended Euclid; valid for any modulus coprime to the value.
    auto r = static_cast<__int128>(modulus_), new_r = static_cast<__int128>(value_);
    __int128 tt = 0, nt = 1;
    while (new_r != 0) {
        __int128 const q = r / new_r;
        __int128 tmp = tt - q * nt;
        tt = nt;
        nt = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible modulo " + std::to_string(modulus_));
    if (tt < 0) tt += modulus_;
    Zp out(0, modulus_);
    out.value_ = static_cast<std::uint64_t>(tt);
    return out;
}

std::string to_string(Zp const& x) { return std::to_string(x.value()); }

}  // namespace dyndeg

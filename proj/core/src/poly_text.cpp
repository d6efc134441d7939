#include "dyndeg/poly_text.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace dyndeg {

ParseError::ParseError(std::string const& message, std::size_t position)
    : std::invalid_argument(message + " at offset " + std::to_string(position)), position_(position) {}

std::vector<std::string> default_variable_names(std::size_t num_vars) {
    if (num_vars == 1) return {"X"};
    if (num_vars == 2) return {"X", "Y"};
    if (num_vars == 3) return {"X", "Y", "Z"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < num_vars; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<std::string const> names) : text_(text), names_(names) {}

    QPoly parse() {
        QPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(std::string const& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    QPoly constant(Rational q) const { return QPoly::constant(names_.size(), std::move(q)); }

    QPoly expression() {
        QPoly sum(names_.size());
        bool negate = false;
        if (char const c = peek(); c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        while (true) {
            QPoly t = product();
            if (negate) sum -= t;
            else sum += t;
            char const c = peek();
            if (c != '+' && c != '-') return sum;
            negate = c == '-';
            ++pos_;
        }
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(' || c == '_';
    }

    QPoly product() {
        QPoly p = power();
        while (true) {
            char const c = peek();
            if (c == '*') {
                ++pos_;
                p *= power();
            } else if (starts_factor(c)) {
                p *= power();
            } else {
                return p;
            }
        }
    }

    QPoly power() {
        QPoly base = primary();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        std::size_t const start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        std::string_view const digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9) fail("exponent too large");
        return base.pow(std::stoull(std::string(digits)));
    }

    Integer natural() {
        std::size_t const start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    QPoly primary() {
        char const c = peek();
        if (c == '(') {
            ++pos_;
            QPoly inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = natural();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                Integer den = natural();
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return constant(q);
            }
            return constant(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t const start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string_view const name = text_.substr(start, pos_ - start);
            if (auto idx = lookup(name)) return QPoly::variable(names_.size(), *idx);
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::optional<std::size_t> lookup(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) return i;
        }
        if (name.size() >= 2 && name.front() == 'X' && name.size() <= 3) {
            std::size_t idx = 0;
            for (char const d : name.substr(1)) {
                if (!std::isdigit(static_cast<unsigned char>(d))) return std::nullopt;
                idx = idx * 10 + static_cast<std::size_t>(d - '0');
            }
            if (idx < names_.size()) return idx;
        }
        return std::nullopt;
    }

    std::string_view text_;
    std::span<std::string const> names_;
    std::size_t pos_ = 0;
};

std::string format_monomial(Monomial const& m, std::span<std::string const> names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

int sign_of(Rational const& q) { return sgn(q); }
int sign_of(Integer const& z) { return sgn(z); }
int sign_of(Zp const&) { return 1; }

Rational magnitude(Rational const& q) { return abs(q); }
Integer magnitude(Integer const& z) { return abs(z); }
Zp magnitude(Zp const& x) { return x; }

template <class C>
std::string format_any(MultiPoly<C> const& p, std::span<std::string const> names) {
    if (names.size() != p.num_vars()) throw ArityMismatch("variable names do not match the ring");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto const& t : p.terms()) {
        bool const negative = sign_of(t.coeff) < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        auto const mag = magnitude(t.coeff);
        std::string const mono = format_monomial(t.mono, names);
        bool const unit = coeff_traits<C>::is_one(mag);
        if (mono.empty()) out += to_string(mag);
        else if (unit) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace

QPoly parse_poly(std::string_view text, std::span<std::string const> names) {
    if (names.size() > max_vars) throw ArityMismatch("too many variables");
    return Parser(text, names).parse();
}

QPoly parse_poly(std::string_view text, std::size_t num_vars) {
    auto const names = default_variable_names(num_vars);
    return parse_poly(text, names);
}

std::string format_poly(QPoly const& p, std::span<std::string const> names) { return format_any(p, names); }

std::string format_poly(QPoly const& p) { return format_any(p, default_variable_names(p.num_vars())); }

std::string format_poly(ZPoly const& p, std::span<std::string const> names) { return format_any(p, names); }

std::string format_poly(FpPoly const& p, std::span<std::string const> names) { return format_any(p, names); }

}  // namespace dyndeg

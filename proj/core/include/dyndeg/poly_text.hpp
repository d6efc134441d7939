#pragma once

// Text form of polynomials: `X*Y - 3/2*Z^2`.
//
// Terms are joined by `+`/`-`; a coefficient is an integer or `num/den`;
// `^` raises a factor to a natural power; `*` between factors is optional
// and parentheses group. Three-variable rings default to the names X, Y, Z,
// all others to X0, X1, ...; the indexed spelling Xi is accepted for any
// ring. Printing is canonical, so parse(print(p)) == p.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyndeg/multipoly.hpp"

namespace dyndeg {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::string const& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// X; X, Y; X, Y, Z; otherwise X0, X1, .... Names Xi are accepted by the
/// parser in every ring.
std::vector<std::string> default_variable_names(std::size_t num_vars);

QPoly parse_poly(std::string_view text, std::span<std::string const> names);
QPoly parse_poly(std::string_view text, std::size_t num_vars);

std::string format_poly(QPoly const& p, std::span<std::string const> names);
std::string format_poly(QPoly const& p);
std::string format_poly(ZPoly const& p, std::span<std::string const> names);
std::string format_poly(FpPoly const& p, std::span<std::string const> names);

}  // namespace dyndeg

#include "dyndeg/jacobian.hpp"

#include <vector>

namespace dyndeg {

namespace {

// Laplace expansion along the first row over the surviving columns.
template <class C>
MultiPoly<C> minor_det(std::vector<std::vector<MultiPoly<C>>> const& m, std::size_t row,
                       std::vector<std::size_t>& cols) {
    if (cols.size() == 1) return m[row][cols.front()];
    MultiPoly<C> acc(m[row][0].num_vars(), m[row][0].ctx());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        auto const& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::size_t const col = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        auto sub = entry * minor_det(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        if (k % 2 == 0) acc += sub;
        else acc -= sub;
    }
    return acc;
}

}  // namespace

template <class C>
MultiPoly<C> jacobian_det(std::span<MultiPoly<C> const> forms, std::size_t coord_vars) {
    if (forms.size() != coord_vars || coord_vars == 0) {
        throw ArityMismatch("jacobian needs as many forms as coordinate variables");
    }
    std::size_t const n = forms.front().num_vars();
    if (coord_vars > n) throw ArityMismatch("more coordinates than ring variables");
    std::vector<std::vector<MultiPoly<C>>> m(coord_vars);
    for (std::size_t i = 0; i < coord_vars; ++i) {
        if (forms[i].num_vars() != n) throw ArityMismatch("forms live in different rings");
        for (std::size_t j = 0; j < coord_vars; ++j) m[i].push_back(forms[i].derivative(j));
    }
    std::vector<std::size_t> cols(coord_vars);
    for (std::size_t j = 0; j < coord_vars; ++j) cols[j] = j;
    return minor_det(m, 0, cols);
}

template <class C>
MultiPoly<C> jacobian_det(std::span<HomogeneousForm<C> const> forms) {
    if (forms.empty()) throw ArityMismatch("jacobian of an empty system");
    std::vector<MultiPoly<C>> polys;
    for (auto const& f : forms) polys.push_back(f.poly());
    return jacobian_det(std::span<MultiPoly<C> const>(polys), forms.front().coord_vars());
}

template QPoly jacobian_det(std::span<QPoly const>, std::size_t);
template FpPoly jacobian_det(std::span<FpPoly const>, std::size_t);
template QPoly jacobian_det(std::span<HomogeneousForm<Rational> const>);
template FpPoly jacobian_det(std::span<HomogeneousForm<Zp> const>);

}  // namespace dyndeg

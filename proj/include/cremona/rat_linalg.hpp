// Small exact linear algebra over the rationals: reduced row echelon form,
// rank, linear solves, and coordinates with respect to a basis of sparse
// polynomials (coefficient vectors taken in graded-lex order).
#ifndef CREMONA_RAT_LINALG_HPP
#define CREMONA_RAT_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "cremona/homog_poly.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

using RatMatrix = std::vector<std::vector<Rat>>;

inline int rref(RatMatrix& m)
{
    int rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[piv]);
        Rat inv = 1 / m[static_cast<std::size_t>(rank)][col];
        for (std::size_t j = col; j < cols; ++j) m[static_cast<std::size_t>(rank)][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

inline int matrix_rank(RatMatrix m) { return rref(m); }

// Solves A x = b for the unique-solution case; nullopt when inconsistent or
// underdetermined in the used columns.
inline std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    int rank = rref(a);
    // inconsistency: pivot in the last column
    for (std::size_t i = 0; i < rows; ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < cols; ++j) zero_row = zero_row && a[i][j] == 0;
        if (zero_row && a[i][cols] != 0) return std::nullopt;
    }
    if (rank != static_cast<int>(cols)) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
        std::size_t lead = 0;
        while (lead < cols && a[i][lead] == 0) ++lead;
        if (lead < cols) x[lead] = a[i][cols];
    }
    return x;
}

inline Rat rat_det(RatMatrix m)
{
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rat inv = 1 / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

// Coefficient vectors of a family of polynomials over the union of their
// monomials, graded-lex descending; one row per polynomial.
inline RatMatrix coefficient_matrix(const std::vector<HomogPoly>& ps)
{
    std::map<std::array<std::uint16_t, kNumVars>, std::size_t> cols;
    for (const auto& p : ps)
        for (const auto& t : p.terms()) cols.emplace(t.mono.e, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : cols) i = idx++;
    RatMatrix out(ps.size(), std::vector<Rat>(cols.size(), Rat(0)));
    for (std::size_t r = 0; r < ps.size(); ++r)
        for (const auto& t : ps[r].terms()) out[r][cols[t.mono.e]] = Rat(t.coef);
    return out;
}

// Coordinates of `target` in the span of `basis`, if any.
inline std::optional<std::vector<Rat>> coordinates_in_span(const std::vector<HomogPoly>& basis, const HomogPoly& target)
{
    std::vector<HomogPoly> all = basis;
    all.push_back(target);
    std::map<std::array<std::uint16_t, kNumVars>, std::size_t> cols;
    for (const auto& p : all)
        for (const auto& t : p.terms()) cols.emplace(t.mono.e, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : cols) i = idx++;
    RatMatrix a(cols.size(), std::vector<Rat>(basis.size(), Rat(0)));
    std::vector<Rat> b(cols.size(), Rat(0));
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& t : basis[c].terms()) a[cols[t.mono.e]][c] = Rat(t.coef);
    for (const auto& t : target.terms()) b[cols[t.mono.e]] = Rat(t.coef);
    return solve_linear(std::move(a), std::move(b));
}

} // namespace cremona

#endif

#pragma once

// Bijections between avoiders, ascent sequences and Fishburn matrices.
//
//   theta      avoider -> ascent sequence (labels of the insertion sites)
//   phi / psi  ascent sequence <-> matrix, built from the addition map g
//              and undone by the removal map f
//   flip       transpose along the anti-diagonal
//   alpha      flip . phi . theta

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fishburn/objects.hpp"
#include "fishburn/patterns.hpp"

namespace fishburn {

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

/// Prefixes-by-value of the insertion process: element k-1 is the
/// restriction of the result to 1..k.
inline std::vector<Permutation> insertion_chain(const AscentSequence& x) {
    std::vector<Permutation> chain{Permutation{1}};
    for (std::size_t k = 1; k < x.size(); ++k) chain.push_back(insert_max(chain.back(), x[k]));
    return chain;
}

inline Permutation theta_inv(const AscentSequence& x) { return insertion_chain(x).back(); }

inline AscentSequence theta(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("theta needs a non-empty permutation");
    if (contains_pattern(p)) throw std::invalid_argument("permutation contains the pattern");
    std::vector<int> xs(p.size(), 0);
    std::vector<int> cur(p.vec());
    for (std::size_t n = p.size(); n > 1; --n) {
        std::size_t at = 0;
        while (cur[at] != static_cast<int>(n)) ++at;
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(at));
        // Gap index of n inside the shorter permutation is its old position.
        const auto sites = active_sites(Permutation(cur));
        auto label = sites.label_of_gap(at);
        if (!label) throw std::logic_error("theta: entry inserted at an inactive site");
        xs[n - 1] = *label;
    }
    return AscentSequence(std::move(xs));
}

// ---------------------------------------------------------------------------
// Removal f and addition g
// ---------------------------------------------------------------------------

namespace detail {

// Mutable 1-based view used while applying the matrix rules.
struct Grid {
    std::size_t dim;
    std::vector<Entry> cells;

    explicit Grid(const FishburnMatrix& m) : dim(m.dim()), cells(m.cells().begin(), m.cells().end()) {}
    Grid(std::size_t d) : dim(d), cells(d * d, 0) {}

    Entry& operator()(std::size_t i, std::size_t j) { return cells[(i - 1) * dim + (j - 1)]; }
    Entry operator()(std::size_t i, std::size_t j) const { return cells[(i - 1) * dim + (j - 1)]; }

    Grid without(std::size_t k) const {
        Grid out(dim - 1);
        for (std::size_t i = 1, oi = 1; i <= dim; ++i) {
            if (i == k) continue;
            for (std::size_t j = 1, oj = 1; j <= dim; ++j) {
                if (j == k) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    // Inserts an empty row and column so that they become number k.
    Grid with_empty(std::size_t k) const {
        Grid out(dim + 1);
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t j = 1; j <= dim; ++j) out(i < k ? i : i + 1, j < k ? j : j + 1) = (*this)(i, j);
        return out;
    }

    FishburnMatrix freeze() && { return FishburnMatrix(dim, std::move(cells)); }
};

inline bool has_nonzero_above(const Grid& g, std::size_t col, std::size_t row) {
    for (std::size_t a = 1; a < row; ++a)
        if (g(a, col) != 0) return true;
    return false;
}

}  // namespace detail

enum class RemovalRule { reduce, drop_last, shift };
enum class AdditionRule { increment, extend, shift };

inline RemovalRule removal_rule(const FishburnMatrix& a) {
    const std::size_t idx = a.index();
    if (a.row_sum(idx - 1) > 1) return RemovalRule::reduce;
    return idx == a.dim() ? RemovalRule::drop_last : RemovalRule::shift;
}

/// Columns j >= index(A) with a nonzero entry strictly above row index(A);
/// 1-based. Meaningful when the shift rule applies.
inline std::vector<std::size_t> removal_shift_columns(const FishburnMatrix& a) {
    const detail::Grid g(a);
    const std::size_t idx = a.index();
    std::vector<std::size_t> cols;
    for (std::size_t j = idx; j <= a.dim(); ++j)
        if (detail::has_nonzero_above(g, j, idx)) cols.push_back(j);
    return cols;
}

/// The removal map f: weight n -> weight n-1.
inline FishburnMatrix removal_f(const FishburnMatrix& a) {
    if (a.weight() < 2) throw std::invalid_argument("removal needs weight >= 2");
    const std::size_t d = a.dim();
    const std::size_t idx = a.index();
    detail::Grid g(a);
    switch (removal_rule(a)) {
    case RemovalRule::reduce:
        g(idx, d) -= 1;
        return std::move(g).freeze();
    case RemovalRule::drop_last:
        return g.without(d).freeze();
    case RemovalRule::shift:
        break;
    }
    auto cols = removal_shift_columns(a);
    cols.push_back(d);
    const detail::Grid src(a);
    for (std::size_t i = 1; i < idx; ++i)
        for (std::size_t t = 0; t + 1 < cols.size(); ++t) g(i, cols[t + 1]) = src(i, cols[t]);
    return g.without(idx).freeze();
}

inline AdditionRule addition_rule(const FishburnMatrix& a, std::size_t i) {
    if (i + 1 <= a.index()) return AdditionRule::increment;
    return i == a.dim() ? AdditionRule::extend : AdditionRule::shift;
}

namespace detail {

inline Grid augmented(const FishburnMatrix& a, std::size_t i) {
    Grid g = Grid(a).with_empty(i + 1);
    g(i + 1, g.dim) = 1;
    return g;
}

inline std::vector<std::size_t> shift_columns(const Grid& g, std::size_t i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = i + 1; j <= g.dim; ++j)
        if (has_nonzero_above(g, j, i + 1)) cols.push_back(j);
    return cols;
}

}  // namespace detail

/// Columns j >= i+1 of the augmented matrix with a nonzero entry strictly
/// above row i+1; 1-based. Meaningful when the shift rule applies.
inline std::vector<std::size_t> addition_shift_columns(const FishburnMatrix& a, std::size_t i) {
    return detail::shift_columns(detail::augmented(a, i), i);
}

/// The addition map g(A, i) for 0 <= i <= dim(A): weight n -> weight n+1,
/// with index(g(A, i)) = i + 1.
inline FishburnMatrix addition_g(const FishburnMatrix& a, std::size_t i) {
    const std::size_t d = a.dim();
    if (i > d) {
        std::ostringstream msg;
        msg << "addition position " << i << " out of range 0.." << d << " (dim(A) = " << d << ")";
        throw std::out_of_range(msg.str());
    }
    switch (addition_rule(a, i)) {
    case AdditionRule::increment: {
        detail::Grid g(a);
        g(i + 1, d) += 1;
        return std::move(g).freeze();
    }
    case AdditionRule::extend: {
        detail::Grid g = detail::Grid(a).with_empty(d + 1);
        g(d + 1, d + 1) = 1;
        return std::move(g).freeze();
    }
    case AdditionRule::shift:
        break;
    }
    const detail::Grid src = detail::augmented(a, i);
    const auto cols = detail::shift_columns(src, i);
    detail::Grid g = src;
    for (std::size_t r = 1; r <= i; ++r) {
        std::size_t prev = i + 1;
        for (std::size_t c : cols) {
            g(r, prev) = src(r, c);
            prev = c;
        }
        g(r, g.dim) = 0;
    }
    return std::move(g).freeze();
}

// ---------------------------------------------------------------------------
// phi, psi, flip, alpha
// ---------------------------------------------------------------------------

/// A^(1), ..., A^(n) with A^(k) = g(A^(k-1), x_k).
inline std::vector<FishburnMatrix> phi_chain(const AscentSequence& x) {
    std::vector<FishburnMatrix> chain{FishburnMatrix{}};
    for (std::size_t k = 1; k < x.size(); ++k)
        chain.push_back(addition_g(chain.back(), static_cast<std::size_t>(x[k])));
    return chain;
}

inline FishburnMatrix phi(const AscentSequence& x) { return phi_chain(x).back(); }

/// A^(1), ..., A^(n) with A^(n) = A and A^(k-1) = f(A^(k)).
inline std::vector<FishburnMatrix> removal_chain(const FishburnMatrix& a) {
    const auto n = static_cast<std::size_t>(a.weight());
    std::vector<FishburnMatrix> chain(n);
    chain[n - 1] = a;
    for (std::size_t k = n - 1; k > 0; --k) chain[k - 1] = removal_f(chain[k]);
    return chain;
}

/// x_k = index(A^(k)) - 1.
inline AscentSequence psi(const FishburnMatrix& a) {
    const auto chain = removal_chain(a);
    std::vector<int> xs;
    xs.reserve(chain.size());
    for (const auto& m : chain) xs.push_back(static_cast<int>(m.index()) - 1);
    return AscentSequence(std::move(xs));
}

inline FishburnMatrix flip(const FishburnMatrix& a) {
    const std::size_t d = a.dim();
    std::vector<Entry> cells(d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) cells[r * d + c] = a.at(d - 1 - c, d - 1 - r);
    return FishburnMatrix(d, std::move(cells));
}

inline FishburnMatrix alpha(const Permutation& p) { return flip(phi(theta(p))); }

inline Permutation alpha_inv(const FishburnMatrix& m) { return theta_inv(psi(flip(m))); }

}  // namespace fishburn

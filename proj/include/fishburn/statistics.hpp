#pragma once

// Statistics on avoiders, (modified) ascent sequences and Fishburn matrices.
//
// Sets that the definitions build from values (LMAXL, RMAXL, RMIN, RMAX)
// are kept as index-driven multisets; value sets are projected only where
// two of them are compared.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fishburn/objects.hpp"
#include "fishburn/patterns.hpp"

namespace fishburn {

/// For each ascent position i, in increasing order, bump every earlier
/// entry x_j (j < i) with x_j >= x_{i+1}. Works on the running values.
inline std::vector<int> modified_sequence(std::span<const int> xs) {
    std::vector<int> out(xs.begin(), xs.end());
    for (int i : ascent_positions(xs)) {
        const int pivot = out[i];  // x_{i+1}, never touched by earlier passes
        for (int j = 0; j + 1 < i; ++j)
            if (out[j] >= pivot) ++out[j];
    }
    return out;
}

inline std::vector<int> modified_sequence(const AscentSequence& x) { return modified_sequence(x.values()); }

// ---------------------------------------------------------------------------

struct PermStats {
    std::vector<int> lrmax, lrmin, rlmax, rlmin;  // values, in left-to-right order
    std::vector<int> lmaxl, rmaxl;                // site labels, sorted ascending
    StatPolynomial delta;
    int a = 0;  // label of the site right after entry n
    int s = 0;  // number of active sites

    int lrmax_count() const { return static_cast<int>(lrmax.size()); }
    int lrmin_count() const { return static_cast<int>(lrmin.size()); }
    int rlmax_count() const { return static_cast<int>(rlmax.size()); }
    int rlmin_count() const { return static_cast<int>(rlmin.size()); }
};

inline PermStats perm_stats(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("statistics need a non-empty permutation");
    const auto sites = active_sites(p);  // throws on pattern-containing input
    const std::size_t n = p.size();
    PermStats st;
    st.s = static_cast<int>(sites.size());

    std::vector<bool> is_lrmax(n), is_rlmax(n);
    for (std::size_t i = 0, hi = 0, lo = n + 1; i < n; ++i) {
        if (static_cast<std::size_t>(p[i]) > hi) {
            hi = p[i];
            is_lrmax[i] = true;
            st.lrmax.push_back(p[i]);
        }
        if (static_cast<std::size_t>(p[i]) < lo) {
            lo = p[i];
            st.lrmin.push_back(p[i]);
        }
    }
    for (std::size_t k = n, hi = 0, lo = n + 1; k-- > 0;) {
        if (static_cast<std::size_t>(p[k]) > hi) {
            hi = p[k];
            is_rlmax[k] = true;
            st.rlmax.push_back(p[k]);
        }
        if (static_cast<std::size_t>(p[k]) < lo) {
            lo = p[k];
            st.rlmin.push_back(p[k]);
        }
    }
    std::reverse(st.rlmax.begin(), st.rlmax.end());
    std::reverse(st.rlmin.begin(), st.rlmin.end());

    for (std::size_t i = 0; i < n; ++i) {
        // l(pi_i): the largest label among sites right of position i
        const int label = sites.largest_label_from(i + 1);
        if (is_lrmax[i]) {
            st.lmaxl.push_back(label);
            st.delta.add_term(label);
        }
        if (is_rlmax[i]) st.rmaxl.push_back(label);
        if (p[i] == static_cast<int>(n)) st.a = *sites.label_of_gap(i + 1);
    }
    std::sort(st.lmaxl.begin(), st.lmaxl.end());
    std::sort(st.rmaxl.begin(), st.rmaxl.end());
    return st;
}

// ---------------------------------------------------------------------------

struct SeqStats {
    std::vector<int> asc_set;  // 1-based ascent positions
    int zero = 0;
    int maxstat = 0;
    std::vector<int> rmin_indices, rmax_indices;  // 1-based
    StatPolynomial chi;

    int rmin_count() const { return static_cast<int>(rmin_indices.size()); }
    int rmax_count() const { return static_cast<int>(rmax_indices.size()); }
};

/// Defined on arbitrary integer sequences so that it also applies to
/// modified ascent sequences. maxstat counts x_i = asc(x_1..x_{i-1}) + 1
/// with asc of the empty prefix taken as -1.
inline SeqStats seq_stats(std::span<const int> xs) {
    SeqStats st;
    st.asc_set = ascent_positions(xs);
    int asc = -1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) ++st.zero;
        if (xs[i] == asc + 1) ++st.maxstat;
        if (i == 0) asc = 0;
        else if (xs[i - 1] < xs[i]) ++asc;
    }
    // Scan right to left tracking the minimum / maximum of the suffix.
    bool have_suffix = false;
    int suffix_min = 0, suffix_max = 0;
    for (std::size_t k = xs.size(); k-- > 0;) {
        if (!have_suffix || xs[k] < suffix_min) st.rmin_indices.push_back(static_cast<int>(k + 1));
        if (!have_suffix || xs[k] >= suffix_max) st.rmax_indices.push_back(static_cast<int>(k + 1));
        suffix_min = have_suffix ? std::min(suffix_min, xs[k]) : xs[k];
        suffix_max = have_suffix ? std::max(suffix_max, xs[k]) : xs[k];
        have_suffix = true;
    }
    std::reverse(st.rmin_indices.begin(), st.rmin_indices.end());
    std::reverse(st.rmax_indices.begin(), st.rmax_indices.end());
    for (int i : st.rmax_indices) st.chi.add_term(xs[i - 1]);
    return st;
}

inline SeqStats seq_stats(const AscentSequence& x) { return seq_stats(x.values()); }

/// Values of x at the given 1-based indices, sorted.
inline std::vector<int> values_at(std::span<const int> xs, const std::vector<int>& indices) {
    std::vector<int> out;
    for (int i : indices) out.push_back(xs[i - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

struct MatrixStats {
    std::size_t dim = 0;
    std::size_t index = 0;  // 1-based
    std::vector<Entry> rsum, csum;
    int tr = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ne_cells;  // 1-based (row, col)
    std::vector<int> ne_rows;                                   // NE(A) = {i - 1}
    StatPolynomial lambda;

    Entry rsum_first() const { return rsum.front(); }
    Entry csum_last() const { return csum.back(); }
    int ne() const { return static_cast<int>(ne_cells.size()); }
};

/// (r, c) is a wNE-cell iff A[r][c] > 0 and every other cell weakly
/// north-east of it is zero.
inline bool is_wne_cell(const FishburnMatrix& a, std::size_t r, std::size_t c) {
    if (a.at(r, c) == 0) return false;
    for (std::size_t s = 0; s <= r; ++s)
        for (std::size_t t = c; t < a.dim(); ++t)
            if ((s != r || t != c) && a.at(s, t) != 0) return false;
    return true;
}

inline MatrixStats matrix_stats(const FishburnMatrix& a) {
    const std::size_t d = a.dim();
    MatrixStats st;
    st.dim = d;
    st.index = a.index();
    for (std::size_t k = 0; k < d; ++k) {
        st.rsum.push_back(a.row_sum(k));
        st.csum.push_back(a.col_sum(k));
        if (a.at(k, k) != 0) ++st.tr;
        st.lambda.add_term(static_cast<int>(k), a.at(k, d - 1));
    }
    std::vector<int> per_row(d, 0), per_col(d, 0);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            if (!is_wne_cell(a, r, c)) continue;
            if (++per_row[r] > 1 || ++per_col[c] > 1)
                throw std::logic_error("two wNE-cells share a row or column");
            st.ne_cells.emplace_back(r + 1, c + 1);
            st.ne_rows.push_back(static_cast<int>(r));
        }
    }
    return st;
}

}  // namespace fishburn

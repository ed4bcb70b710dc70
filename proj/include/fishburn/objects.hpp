#pragma once

// Core value types for the three Fishburn families: permutations, ascent
// sequences and Fishburn matrices, plus the sparse polynomial used for the
// q-refined statistics.
//
// Indexing: all C++ accessors are 0-based. Quantities that are 1-based by
// definition (ascent positions, index(A)) say so in their doc comment.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fishburn {

using Entry = int;

/// Number of ascents of a sequence, i.e. positions i with x_i < x_{i+1}.
inline int count_ascents(std::span<const int> xs) {
    int asc = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] < xs[i]) ++asc;
    return asc;
}

/// 1-based ascent positions of a sequence.
inline std::vector<int> ascent_positions(std::span<const int> xs) {
    std::vector<int> out;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] < xs[i]) out.push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

inline bool is_permutation_of_n(std::span<const int> elems) {
    const auto n = elems.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : elems) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
        if (!is_permutation_of_n(elems_))
            throw std::invalid_argument("not a permutation of 1..n");
    }

    Permutation(std::initializer_list<int> elems) : Permutation(std::vector<int>(elems)) {}

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    std::span<const int> values() const noexcept { return elems_; }
    const std::vector<int>& vec() const noexcept { return elems_; }

    Permutation inverse() const {
        std::vector<int> inv(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i)
            inv[elems_[i] - 1] = static_cast<int>(i + 1);
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> elems_;
};

// ---------------------------------------------------------------------------
// Ascent sequences
// ---------------------------------------------------------------------------

/// 1-based index of the first entry breaking the ascent-sequence rules,
/// or nullopt when xs is a valid (non-empty) ascent sequence.
inline std::optional<std::size_t> first_ascent_violation(std::span<const int> xs) {
    if (xs.empty()) return std::size_t{0};
    if (xs[0] != 0) return std::size_t{1};
    int asc = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] < 0 || xs[i] > asc + 1) return i + 1;
        if (xs[i - 1] < xs[i]) ++asc;
    }
    return std::nullopt;
}

inline bool validate_ascent_sequence(std::span<const int> xs) {
    return !first_ascent_violation(xs).has_value();
}

class AscentSequence {
public:
    AscentSequence() : elems_{0} {}

    explicit AscentSequence(std::vector<int> elems) : elems_(std::move(elems)) {
        if (auto bad = first_ascent_violation(elems_)) {
            if (*bad == 0) throw std::invalid_argument("ascent sequence must be non-empty");
            std::ostringstream msg;
            msg << "not an ascent sequence: entry " << *bad << " (value "
                << elems_[*bad - 1] << ") violates the ascent bound";
            throw std::invalid_argument(msg.str());
        }
    }

    AscentSequence(std::initializer_list<int> elems) : AscentSequence(std::vector<int>(elems)) {}

    std::size_t size() const noexcept { return elems_.size(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    int back() const { return elems_.back(); }
    std::span<const int> values() const noexcept { return elems_; }
    const std::vector<int>& vec() const noexcept { return elems_; }
    int asc() const { return count_ascents(elems_); }

    friend bool operator==(const AscentSequence&, const AscentSequence&) = default;
    friend auto operator<=>(const AscentSequence&, const AscentSequence&) = default;

private:
    std::vector<int> elems_;
};

/// Calls f(const std::vector<int>&) on every ascent sequence of length n, in
/// lexicographic order.
template <class F>
void for_each_ascent_sequence(std::size_t n, F&& f) {
    if (n == 0) return;
    std::vector<int> xs(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int asc) -> void {
        if (pos == n) {
            f(std::as_const(xs));
            return;
        }
        for (int v = 0; v <= asc + 1; ++v) {
            xs[pos] = v;
            self(self, pos + 1, asc + (xs[pos - 1] < v ? 1 : 0));
        }
    };
    rec(rec, 1, 0);
}

inline std::vector<AscentSequence> enumerate_ascent_sequences(std::size_t n) {
    std::vector<AscentSequence> out;
    for_each_ascent_sequence(n, [&](const std::vector<int>& xs) { out.emplace_back(xs); });
    return out;
}

// ---------------------------------------------------------------------------
// Fishburn matrices
// ---------------------------------------------------------------------------

/// Square, upper triangular, nonnegative, no zero row or column.
inline bool validate_fishburn_grid(std::size_t dim, std::span<const Entry> cells) {
    if (dim == 0 || cells.size() != dim * dim) return false;
    std::vector<bool> row_hit(dim, false), col_hit(dim, false);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Entry v = cells[r * dim + c];
            if (v < 0) return false;
            if (v == 0) continue;
            if (r > c) return false;
            row_hit[r] = col_hit[c] = true;
        }
    }
    return std::all_of(row_hit.begin(), row_hit.end(), [](bool b) { return b; }) &&
           std::all_of(col_hit.begin(), col_hit.end(), [](bool b) { return b; });
}

inline bool validate_fishburn_matrix(const std::vector<std::vector<Entry>>& grid) {
    const std::size_t dim = grid.size();
    std::vector<Entry> cells;
    cells.reserve(dim * dim);
    for (const auto& row : grid) {
        if (row.size() != dim) return false;
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return validate_fishburn_grid(dim, cells);
}

class FishburnMatrix {
public:
    /// The 1x1 matrix (1).
    FishburnMatrix() : dim_(1), cells_{1} {}

    /// Row-major dense cells; throws std::invalid_argument unless the grid
    /// is a Fishburn matrix.
    FishburnMatrix(std::size_t dim, std::vector<Entry> cells) : dim_(dim), cells_(std::move(cells)) {
        if (!validate_fishburn_grid(dim_, cells_))
            throw std::invalid_argument("not a Fishburn matrix");
    }

    static FishburnMatrix from_rows(const std::vector<std::vector<Entry>>& rows) {
        std::vector<Entry> cells;
        for (const auto& row : rows) {
            if (row.size() != rows.size()) throw std::invalid_argument("matrix is not square");
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return FishburnMatrix(rows.size(), std::move(cells));
    }

    std::size_t dim() const noexcept { return dim_; }
    Entry at(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }
    std::span<const Entry> cells() const noexcept { return cells_; }

    std::vector<std::vector<Entry>> rows() const {
        std::vector<std::vector<Entry>> out(dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            out[r].assign(cells_.begin() + r * dim_, cells_.begin() + (r + 1) * dim_);
        return out;
    }

    Entry weight() const {
        Entry w = 0;
        for (Entry v : cells_) w += v;
        return w;
    }

    Entry row_sum(std::size_t r) const {
        Entry s = 0;
        for (std::size_t c = 0; c < dim_; ++c) s += at(r, c);
        return s;
    }

    Entry col_sum(std::size_t c) const {
        Entry s = 0;
        for (std::size_t r = 0; r < dim_; ++r) s += at(r, c);
        return s;
    }

    /// 1-based number of the topmost row with a nonzero entry in the last column.
    std::size_t index() const {
        for (std::size_t r = 0; r < dim_; ++r)
            if (at(r, dim_ - 1) != 0) return r + 1;
        return dim_;  // unreachable for a valid matrix
    }

    friend bool operator==(const FishburnMatrix&, const FishburnMatrix&) = default;
    friend auto operator<=>(const FishburnMatrix&, const FishburnMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Entry> cells_;
};

/// Calls f(const FishburnMatrix&) on every Fishburn matrix of weight n,
/// ordered by dimension and then lexicographically on row-major entries.
///
/// Brute force over upper-triangular fillings; the only pruning is that each
/// finished row must be nonzero and enough weight must remain for the rows
/// still to come. Columns are checked by the validator.
template <class F>
void for_each_fishburn_matrix(std::size_t n, F&& f) {
    for (std::size_t dim = 1; dim <= n; ++dim) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = r; c < dim; ++c) slots.emplace_back(r, c);
        std::vector<Entry> cells(dim * dim, 0);

        auto rec = [&](auto&& self, std::size_t k, Entry remaining, Entry row_weight) -> void {
            const bool row_start = k == slots.size() || slots[k].second == slots[k].first;
            if (row_start && k > 0) {
                if (row_weight == 0) return;
                const std::size_t rows_left = k == slots.size() ? 0 : dim - slots[k].first;
                if (static_cast<std::size_t>(remaining) < rows_left) return;
                row_weight = 0;
            }
            if (k == slots.size()) {
                if (remaining == 0 && validate_fishburn_grid(dim, cells)) f(FishburnMatrix(dim, cells));
                return;
            }
            const auto [r, c] = slots[k];
            for (Entry v = 0; v <= remaining; ++v) {
                cells[r * dim + c] = v;
                self(self, k + 1, remaining - v, row_weight + v);
            }
            cells[r * dim + c] = 0;
        };
        rec(rec, 0, static_cast<Entry>(n), 0);
    }
}

inline std::vector<FishburnMatrix> enumerate_fishburn_matrices(std::size_t n) {
    std::vector<FishburnMatrix> out;
    for_each_fishburn_matrix(n, [&](const FishburnMatrix& m) { out.push_back(m); });
    return out;
}

// ---------------------------------------------------------------------------
// StatPolynomial
// ---------------------------------------------------------------------------

/// Sparse polynomial in q with positive integer coefficients.
class StatPolynomial {
public:
    using Coeff = std::int64_t;

    StatPolynomial() = default;

    void add_term(int exponent, Coeff coeff = 1) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) return;
        auto& slot = coeffs_[exponent];
        slot += coeff;
        if (slot == 0) coeffs_.erase(exponent);
    }

    Coeff coefficient(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    Coeff evaluate(Coeff q) const {
        Coeff total = 0;
        for (const auto& [e, c] : coeffs_) {
            Coeff p = 1;
            for (int i = 0; i < e; ++i) p *= q;
            total += c * p;
        }
        return total;
    }

    const std::map<int, Coeff>& terms() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// "2q^2 + q^3", ascending exponents; "0" for the zero polynomial.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (e == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c;
            os << 'q';
            if (e != 1) os << '^' << e;
        }
        return os.str();
    }

    friend bool operator==(const StatPolynomial&, const StatPolynomial&) = default;

private:
    std::map<int, Coeff> coeffs_;
};

}  // namespace fishburn

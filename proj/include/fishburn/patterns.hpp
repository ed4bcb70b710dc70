#pragma once

// Containment of the pattern  pi_i pi_{i+1} ... pi_j  with  pi_i + 1 = pi_j < pi_{i+1}
// (first two entries adjacent in position, first and last adjacent in value),
// and the active sites used to grow avoiders one maximum at a time.
//
// Gaps are numbered 0..n front to back: gap g sits between pi_g and
// pi_{g+1}. Active sites carry a separate label, counted right to left from 0.

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

/// Works on any sequence holding each of 1..n once.
inline bool contains_pattern(std::span<const int> p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> pos(n + 2, 0);
    for (std::size_t k = 0; k < n; ++k) pos[p[k]] = k;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int succ = p[i] + 1;
        if (static_cast<std::size_t>(succ) > n) continue;
        if (pos[succ] > i + 1 && succ < p[i + 1]) return true;
    }
    return false;
}

inline bool contains_pattern(const Permutation& p) { return contains_pattern(p.values()); }

struct ActiveSiteLabeling {
    std::vector<std::size_t> sites;  // active gaps, ascending

    std::size_t size() const noexcept { return sites.size(); }

    int label_of_index(std::size_t k) const { return static_cast<int>(sites.size() - 1 - k); }

    std::optional<int> label_of_gap(std::size_t gap) const {
        for (std::size_t k = 0; k < sites.size(); ++k)
            if (sites[k] == gap) return label_of_index(k);
        return std::nullopt;
    }

    std::size_t gap_of_label(int label) const { return sites[sites.size() - 1 - label]; }

    /// Label of the leftmost active gap at or after `gap`, i.e. the largest
    /// label of a site to the right of the entry just before `gap`.
    int largest_label_from(std::size_t gap) const {
        for (std::size_t k = 0; k < sites.size(); ++k)
            if (sites[k] >= gap) return label_of_index(k);
        throw std::logic_error("end gap must be active");
    }
};

inline std::vector<int> insert_at_gap(std::span<const int> p, std::size_t gap, int value) {
    std::vector<int> out(p.begin(), p.end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap), value);
    return out;
}

inline ActiveSiteLabeling active_sites(const Permutation& p) {
    if (contains_pattern(p)) throw std::invalid_argument("active sites are defined only on avoiders");
    ActiveSiteLabeling out;
    const int next = static_cast<int>(p.size()) + 1;
    for (std::size_t gap = 0; gap <= p.size(); ++gap)
        if (!contains_pattern(insert_at_gap(p.values(), gap, next))) out.sites.push_back(gap);
    return out;
}

/// "_3 5 2 3 1 _2 6 4 _1 7 _0"
inline std::string labeled_sites_text(const Permutation& p) {
    const auto sites = active_sites(p);
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string& s) {
        os << (first ? "" : " ") << s;
        first = false;
    };
    for (std::size_t gap = 0; gap <= p.size(); ++gap) {
        if (auto label = sites.label_of_gap(gap)) put("_" + std::to_string(*label));
        if (gap < p.size()) put(std::to_string(p[gap]));
    }
    return os.str();
}

inline Permutation insert_max(const Permutation& p, int label) {
    const auto sites = active_sites(p);
    if (label < 0 || static_cast<std::size_t>(label) >= sites.size()) {
        std::ostringstream msg;
        msg << "label " << label << " out of range: permutation has s = " << sites.size()
            << " active sites";
        throw std::out_of_range(msg.str());
    }
    return Permutation(insert_at_gap(p.values(), sites.gap_of_label(label), static_cast<int>(p.size()) + 1));
}

/// Calls f(const Permutation&) on every avoider of length n, ordered by
/// the lexicographic order of the label sequences that build them.
template <class F>
void for_each_avoider(std::size_t n, F&& f) {
    if (n == 0) return;
    auto rec = [&](auto&& self, const Permutation& p) -> void {
        if (p.size() == n) {
            f(p);
            return;
        }
        const auto sites = active_sites(p);
        const int next = static_cast<int>(p.size()) + 1;
        for (int label = 0; label < static_cast<int>(sites.size()); ++label)
            self(self, Permutation(insert_at_gap(p.values(), sites.gap_of_label(label), next)));
    };
    rec(rec, Permutation{1});
}

inline std::vector<Permutation> enumerate_avoiders(std::size_t n) {
    std::vector<Permutation> out;
    for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace fishburn

#pragma once

// Ground truth independent of the bijections: Fishburn numbers from the
// series  sum_{n>=0} prod_{k=1..n} (1 - (1-x)^k),  brute-force avoiders
// by filtering all n! permutations, and a count cross-check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fishburn/objects.hpp"
#include "fishburn/patterns.hpp"

namespace fishburn {

using BigInt = boost::multiprecision::cpp_int;

/// Power series truncated at a fixed degree N (always N + 1 coefficients).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}

    static TruncatedSeries constant(std::size_t degree, BigInt c) {
        TruncatedSeries s(degree);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
    BigInt& operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries out(degree());
        for (std::size_t k = 0; k <= degree(); ++k) out[k] = coeffs_[k] + o[k];
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        TruncatedSeries out(degree());
        for (std::size_t k = 0; k <= degree(); ++k) out[k] = coeffs_[k] - o[k];
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries out(degree());
        for (std::size_t i = 0; i <= degree(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= degree(); ++j) out[i + j] += coeffs_[i] * o[j];
        }
        return out;
    }

private:
    std::vector<BigInt> coeffs_;
};

/// F_0..F_N. Each factor 1 - (1-x)^k has no constant term, so products with
/// more than N factors vanish below degree N + 1.
inline std::vector<BigInt> fishburn_numbers(std::size_t max_n) {
    const TruncatedSeries one = TruncatedSeries::constant(max_n, 1);
    TruncatedSeries one_minus_x = one;
    if (max_n >= 1) one_minus_x[1] = -1;

    TruncatedSeries total = one;  // n = 0 term: empty product
    TruncatedSeries product = one;
    TruncatedSeries power = one;  // (1-x)^k
    for (std::size_t k = 1; k <= max_n; ++k) {
        power = power * one_minus_x;
        product = product * (one - power);
        total = total + product;
    }
    return total.coefficients();
}

inline constexpr std::size_t kFilterCap = 9;

/// All avoiders of length n, found by testing every permutation. Sorted.
inline std::vector<Permutation> filter_avoiders(std::size_t n) {
    if (n > kFilterCap)
        throw std::out_of_range("filter_avoiders: n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kFilterCap));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        if (!contains_pattern(p)) out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct CountRecord {
    std::string family;
    std::size_t n = 0;
    std::uint64_t count = 0;
    BigInt expected;
    bool ok = false;
};

struct CountReport {
    std::vector<CountRecord> records;

    bool ok() const {
        return std::all_of(records.begin(), records.end(), [](const CountRecord& r) { return r.ok; });
    }
};

inline CountReport cross_check_counts(std::size_t n_max) {
    if (n_max > kFilterCap)
        throw std::out_of_range("cross_check_counts: n_max exceeds cap " + std::to_string(kFilterCap));
    const auto fib = fishburn_numbers(n_max);
    CountReport report;
    auto record = [&](const char* family, std::size_t n, std::uint64_t count) {
        report.records.push_back({family, n, count, fib[n], BigInt(count) == fib[n]});
    };
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::uint64_t seqs = 0, mats = 0, avoiders = 0;
        for_each_ascent_sequence(n, [&](const auto&) { ++seqs; });
        for_each_fishburn_matrix(n, [&](const auto&) { ++mats; });
        for_each_avoider(n, [&](const auto&) { ++avoiders; });
        record("sequences", n, seqs);
        record("matrices", n, mats);
        record("avoiders", n, avoiders);
    }
    return report;
}

}  // namespace fishburn

#pragma once

// Text and JSON forms of the three object kinds.
//
//   permutation      "8 5 2 3 1 6 4 7"       [8,5,2,3,1,6,4,7]
//   ascent sequence  "0 1 1 0 2 1 0 3"       [0,1,1,0,2,1,0,3]
//   matrix           "1 1; 0 1"              [[1,1],[0,1]]
//
// Parsers throw ParseError naming the first offending token.

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fishburn/objects.hpp"

namespace fishburn {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t ordinal;  // 1-based token number within the input
};

inline std::vector<Token> split_tokens(std::string_view s, std::size_t first_ordinal = 1) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back({std::string(s.substr(i, j - i)), first_ordinal + out.size()});
        i = j;
    }
    return out;
}

[[noreturn]] inline void bad_token(const Token& t, std::string_view why) {
    std::ostringstream msg;
    msg << "token " << t.ordinal << " '" << t.text << "': " << why;
    throw ParseError(msg.str());
}

inline int to_int(const Token& t) {
    int v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) bad_token(t, "not an integer");
    return v;
}

inline std::vector<int> parse_ints(std::string_view s, std::size_t first_ordinal = 1) {
    std::vector<int> out;
    for (const auto& t : split_tokens(s, first_ordinal)) out.push_back(to_int(t));
    return out;
}

inline std::string join(std::span<const int> xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

}  // namespace detail

inline Permutation parse_permutation(std::string_view s) {
    const auto tokens = detail::split_tokens(s);
    if (tokens.empty()) throw ParseError("empty permutation");
    const std::size_t n = tokens.size();
    std::vector<int> elems;
    std::vector<bool> seen(n + 1, false);
    for (const auto& t : tokens) {
        int v = detail::to_int(t);
        if (v < 1 || static_cast<std::size_t>(v) > n)
            detail::bad_token(t, "value out of range 1.." + std::to_string(n));
        if (seen[v]) detail::bad_token(t, "duplicate value");
        seen[v] = true;
        elems.push_back(v);
    }
    return Permutation(std::move(elems));
}

inline AscentSequence parse_ascent_sequence(std::string_view s) {
    const auto tokens = detail::split_tokens(s);
    if (tokens.empty()) throw ParseError("empty ascent sequence");
    std::vector<int> xs;
    for (const auto& t : tokens) xs.push_back(detail::to_int(t));
    if (auto bad = first_ascent_violation(xs)) {
        const auto& t = tokens[*bad - 1];
        detail::bad_token(t, *bad == 1 ? "ascent sequence must start with 0"
                                       : "exceeds 1 + number of ascents before it");
    }
    return AscentSequence(std::move(xs));
}

inline FishburnMatrix parse_matrix(std::string_view s) {
    std::vector<std::vector<Entry>> rows;
    std::vector<detail::Token> all;
    std::size_t ordinal = 1;
    std::size_t start = 0;
    while (true) {
        auto semi = s.find(';', start);
        auto piece = s.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        auto tokens = detail::split_tokens(piece, ordinal);
        ordinal += tokens.size();
        std::vector<Entry> row;
        for (const auto& t : tokens) {
            int v = detail::to_int(t);
            if (v < 0) detail::bad_token(t, "negative entry");
            row.push_back(v);
        }
        all.insert(all.end(), tokens.begin(), tokens.end());
        rows.push_back(std::move(row));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    const std::size_t dim = rows.size();
    std::size_t seen = 0;
    for (std::size_t r = 0; r < dim; ++r) {
        if (rows[r].size() != dim) {
            std::ostringstream msg;
            msg << "row " << r + 1 << " has " << rows[r].size() << " entries, expected " << dim;
            if (rows[r].size() > dim) detail::bad_token(all[seen + dim], msg.str());
            throw ParseError(msg.str());
        }
        for (std::size_t c = 0; c < r; ++c)
            if (rows[r][c] != 0) detail::bad_token(all[seen + c], "nonzero entry below the diagonal");
        seen += rows[r].size();
    }
    for (std::size_t r = 0; r < dim; ++r) {
        bool nonzero = false;
        for (Entry v : rows[r]) nonzero |= v != 0;
        if (!nonzero) throw ParseError("row " + std::to_string(r + 1) + " is zero");
    }
    for (std::size_t c = 0; c < dim; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < dim; ++r) nonzero |= rows[r][c] != 0;
        if (!nonzero) throw ParseError("column " + std::to_string(c + 1) + " is zero");
    }
    return FishburnMatrix::from_rows(rows);
}

inline std::string to_text(const Permutation& p) { return detail::join(p.values()); }
inline std::string to_text(const AscentSequence& x) { return detail::join(x.values()); }

inline std::string to_text(const FishburnMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? " " : "") << m.at(r, c);
    }
    return os.str();
}

/// Multi-line, column-aligned rendering used by --chain output.
inline std::string to_grid(const FishburnMatrix& m) {
    std::size_t width = 1;
    for (Entry v : m.cells()) width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            auto s = std::to_string(m.at(r, c));
            os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

// nlohmann ADL hooks

template <class BasicJson>
void to_json(BasicJson& j, const Permutation& p) { j = p.vec(); }
template <class BasicJson>
void to_json(BasicJson& j, const AscentSequence& x) { j = x.vec(); }
template <class BasicJson>
void to_json(BasicJson& j, const FishburnMatrix& m) { j = m.rows(); }

template <class BasicJson>
void to_json(BasicJson& j, const StatPolynomial& p) {
    j = BasicJson::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
}

template <class BasicJson>
void from_json(const BasicJson& j, Permutation& p) {
    p = Permutation(j.template get<std::vector<int>>());
}
template <class BasicJson>
void from_json(const BasicJson& j, AscentSequence& x) {
    x = AscentSequence(j.template get<std::vector<int>>());
}
template <class BasicJson>
void from_json(const BasicJson& j, FishburnMatrix& m) {
    m = FishburnMatrix::from_rows(j.template get<std::vector<std::vector<Entry>>>());
}

}  // namespace fishburn

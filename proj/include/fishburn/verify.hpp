#pragma once

// Exhaustive desk-scale verification: statistic transport through theta,
// phi and alpha, round trips, joint-distribution symmetry, and the
// inverse/flip counterexample.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fishburn/bijections.hpp"
#include "fishburn/format.hpp"
#include "fishburn/objects.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/patterns.hpp"
#include "fishburn/statistics.hpp"

namespace fishburn {

inline constexpr std::size_t kTransportCap = 8;

enum class Family { avoiders, sequences, matrices };

inline std::string to_string(Family f) {
    switch (f) {
    case Family::avoiders: return "avoiders";
    case Family::sequences: return "sequences";
    case Family::matrices: return "matrices";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "avoiders" || s == "perm") return Family::avoiders;
    if (s == "sequences" || s == "seq") return Family::sequences;
    if (s == "matrices" || s == "matrix") return Family::matrices;
    throw std::invalid_argument("unknown family '" + s + "' (expected avoiders, sequences or matrices)");
}

// ---------------------------------------------------------------------------
// Statistic registry
// ---------------------------------------------------------------------------

namespace detail {

struct SeqPair {
    SeqStats plain;
    SeqStats modified;
    int asc = 0;
    int last = 0;
};

template <class S>
using StatTable = std::vector<std::pair<std::string, std::function<int(const S&)>>>;

inline const StatTable<PermStats>& perm_stat_table() {
    static const StatTable<PermStats> t{
        {"LRmax", [](const PermStats& s) { return s.lrmax_count(); }},
        {"LRmin", [](const PermStats& s) { return s.lrmin_count(); }},
        {"RLmax", [](const PermStats& s) { return s.rlmax_count(); }},
        {"RLmin", [](const PermStats& s) { return s.rlmin_count(); }},
        {"s", [](const PermStats& s) { return s.s; }},
        {"a", [](const PermStats& s) { return s.a; }},
    };
    return t;
}

inline const StatTable<SeqPair>& seq_stat_table() {
    static const StatTable<SeqPair> t{
        {"zero", [](const SeqPair& s) { return s.plain.zero; }},
        {"max", [](const SeqPair& s) { return s.plain.maxstat; }},
        {"Rmin", [](const SeqPair& s) { return s.plain.rmin_count(); }},
        {"Rmax", [](const SeqPair& s) { return s.plain.rmax_count(); }},
        {"Rmax_hat", [](const SeqPair& s) { return s.modified.rmax_count(); }},
        {"asc", [](const SeqPair& s) { return s.asc; }},
        {"last", [](const SeqPair& s) { return s.last; }},
    };
    return t;
}

inline const StatTable<MatrixStats>& matrix_stat_table() {
    static const StatTable<MatrixStats> t{
        {"rsum1", [](const MatrixStats& s) { return s.rsum_first(); }},
        {"csum_dim", [](const MatrixStats& s) { return s.csum_last(); }},
        {"ne", [](const MatrixStats& s) { return s.ne(); }},
        {"tr", [](const MatrixStats& s) { return s.tr; }},
        {"dim", [](const MatrixStats& s) { return static_cast<int>(s.dim); }},
        {"index", [](const MatrixStats& s) { return static_cast<int>(s.index); }},
    };
    return t;
}

template <class S>
std::function<int(const S&)> lookup(const StatTable<S>& table, Family family, const std::string& name) {
    for (const auto& [key, fn] : table)
        if (key == name) return fn;
    std::ostringstream msg;
    msg << "unknown statistic '" << name << "' for " << to_string(family) << "; available:";
    for (const auto& entry : table) msg << ' ' << entry.first;
    throw std::invalid_argument(msg.str());
}

inline SeqPair seq_pair(const std::vector<int>& xs) {
    return {seq_stats(xs), seq_stats(modified_sequence(xs)), count_ascents(xs), xs.back()};
}

}  // namespace detail

inline std::vector<std::string> statistic_names(Family family) {
    std::vector<std::string> out;
    auto collect = [&](const auto& table) {
        for (const auto& entry : table) out.push_back(entry.first);
    };
    switch (family) {
    case Family::avoiders: collect(detail::perm_stat_table()); break;
    case Family::sequences: collect(detail::seq_stat_table()); break;
    case Family::matrices: collect(detail::matrix_stat_table()); break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Joint tables
// ---------------------------------------------------------------------------

struct JointTable {
    std::size_t n = 0;
    Family family = Family::matrices;
    std::string stat_a, stat_b;
    std::map<std::pair<int, int>, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [key, c] : counts) t += c;
        return t;
    }

    std::uint64_t at(int a, int b) const {
        auto it = counts.find({a, b});
        return it == counts.end() ? 0 : it->second;
    }
};

inline JointTable joint_table(Family family, const std::string& stat_a, const std::string& stat_b,
                              std::size_t n) {
    if (n == 0 || n > kFilterCap)
        throw std::out_of_range("joint_table: n must be in 1.." + std::to_string(kFilterCap));
    JointTable t{n, family, stat_a, stat_b, {}};
    switch (family) {
    case Family::avoiders: {
        auto fa = detail::lookup(detail::perm_stat_table(), family, stat_a);
        auto fb = detail::lookup(detail::perm_stat_table(), family, stat_b);
        for_each_avoider(n, [&](const Permutation& p) {
            const auto st = perm_stats(p);
            ++t.counts[{fa(st), fb(st)}];
        });
        break;
    }
    case Family::sequences: {
        auto fa = detail::lookup(detail::seq_stat_table(), family, stat_a);
        auto fb = detail::lookup(detail::seq_stat_table(), family, stat_b);
        for_each_ascent_sequence(n, [&](const std::vector<int>& xs) {
            const auto st = detail::seq_pair(xs);
            ++t.counts[{fa(st), fb(st)}];
        });
        break;
    }
    case Family::matrices: {
        auto fa = detail::lookup(detail::matrix_stat_table(), family, stat_a);
        auto fb = detail::lookup(detail::matrix_stat_table(), family, stat_b);
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& m) {
            const auto st = matrix_stats(m);
            ++t.counts[{fa(st), fb(st)}];
        });
        break;
    }
    }
    return t;
}

inline bool check_symmetry(const JointTable& t) {
    for (const auto& [key, c] : t.counts)
        if (t.at(key.second, key.first) != c) return false;
    return true;
}

inline std::string to_text(const JointTable& t) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [key, c] : t.counts) {
        for (int v : {key.first, key.second}) {
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    }
    std::ostringstream os;
    os << to_string(t.family) << " n=" << t.n << ": rows " << t.stat_a << ", columns " << t.stat_b << '\n';
    std::size_t w = 1;
    for (const auto& [key, c] : t.counts) w = std::max(w, std::to_string(c).size());
    w = std::max(w, std::to_string(hi).size());
    auto pad = [&](const std::string& s) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    os << pad("") << " |";
    for (int b = lo; b <= hi; ++b) os << ' ' << pad(std::to_string(b));
    os << '\n';
    for (int a = lo; a <= hi; ++a) {
        os << pad(std::to_string(a)) << " |";
        for (int b = lo; b <= hi; ++b) os << ' ' << pad(std::to_string(t.at(a, b)));
        os << '\n';
    }
    os << "total " << t.total() << ", symmetric: " << (check_symmetry(t) ? "yes" : "no") << '\n';
    return os.str();
}

template <class BasicJson>
void to_json(BasicJson& j, const JointTable& t) {
    j = BasicJson{{"n", t.n},          {"family", to_string(t.family)},
                       {"stat_a", t.stat_a}, {"stat_b", t.stat_b},
                       {"total", t.total()}, {"symmetric", check_symmetry(t)}};
    auto cells = BasicJson::array();
    for (const auto& [key, c] : t.counts) cells.push_back({{"a", key.first}, {"b", key.second}, {"count", c}});
    j["counts"] = std::move(cells);
}

// ---------------------------------------------------------------------------
// Transport and round trips
// ---------------------------------------------------------------------------

struct Counterexample {
    std::string object;     // text form of the offending object
    std::string statistic;  // which equality failed
    std::string lhs, rhs;
};

struct CheckResult {
    std::string name;
    std::size_t n_max = 0;
    std::uint64_t checked = 0;
    std::optional<Counterexample> failure;

    bool ok() const { return !failure; }
};

namespace detail {

inline std::string text_of(int v) { return std::to_string(v); }
inline std::string text_of(const std::string& s) { return s; }
inline std::string text_of(const std::vector<int>& v) { return "{" + join(v) + "}"; }
inline std::string text_of(const StatPolynomial& p) { return p.to_string(); }

// Records the first mismatch; later ones are ignored.
class Checker {
public:
    explicit Checker(CheckResult& r) : r_(r) {}

    template <class T>
    void expect_eq(const std::string& object, const std::string& stat, const T& lhs, const T& rhs) {
        if (r_.failure || lhs == rhs) return;
        r_.failure = Counterexample{object, stat, text_of(lhs), text_of(rhs)};
    }

    bool failed() const { return r_.failure.has_value(); }

private:
    CheckResult& r_;
};

inline std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace detail

/// avoider -> sequence: (RLmin, LRmin, RLmax, LRmax) = (zero, max, Rmin, Rmax(x^)),
/// RMAXL = RMIN values, delta = chi(x^).
inline CheckResult check_theta_transport(std::size_t n_max) {
    CheckResult r{"theta transport", n_max, 0, {}};
    detail::Checker c(r);
    for (std::size_t n = 1; n <= n_max && !c.failed(); ++n) {
        for_each_avoider(n, [&](const Permutation& p) {
            const auto x = theta(p);
            const auto ps = perm_stats(p);
            const auto hat = modified_sequence(x);
            const auto xs = seq_stats(x);
            const auto hs = seq_stats(hat);
            const auto obj = to_text(p);
            c.expect_eq(obj, "RLmin = zero", ps.rlmin_count(), xs.zero);
            c.expect_eq(obj, "LRmin = max", ps.lrmin_count(), xs.maxstat);
            c.expect_eq(obj, "RMAXL = RMIN", ps.rmaxl, values_at(x.values(), xs.rmin_indices));
            c.expect_eq(obj, "delta = chi(modified)", ps.delta, hs.chi);
            c.expect_eq(obj, "RLmax = Rmin", ps.rlmax_count(), xs.rmin_count());
            c.expect_eq(obj, "LRmax = Rmax(modified)", ps.lrmax_count(), hs.rmax_count());
            c.expect_eq(obj, "s = 2 + asc", ps.s, 2 + x.asc());
            c.expect_eq(obj, "a = last", ps.a, x.back());
            ++r.checked;
        });
    }
    return r;
}

/// sequence -> matrix: (zero, max, Rmin, Rmax(x^)) = (rsum1, tr, ne, csum_dim),
/// RMIN values = NE, chi(x^) = lambda, dim = asc + 1, index = last + 1.
inline CheckResult check_phi_transport(std::size_t n_max) {
    CheckResult r{"phi transport", n_max, 0, {}};
    detail::Checker c(r);
    for (std::size_t n = 1; n <= n_max && !c.failed(); ++n) {
        for_each_ascent_sequence(n, [&](const std::vector<int>& v) {
            const AscentSequence x(v);
            const auto a = phi(x);
            const auto ms = matrix_stats(a);
            const auto xs = seq_stats(x);
            const auto hs = seq_stats(modified_sequence(x));
            const auto obj = to_text(x);
            c.expect_eq(obj, "zero = rsum1", xs.zero, static_cast<int>(ms.rsum_first()));
            c.expect_eq(obj, "max = tr", xs.maxstat, ms.tr);
            c.expect_eq(obj, "RMIN = NE", values_at(x.values(), xs.rmin_indices), detail::sorted(ms.ne_rows));
            c.expect_eq(obj, "chi(modified) = lambda", hs.chi, ms.lambda);
            c.expect_eq(obj, "Rmin = ne", xs.rmin_count(), ms.ne());
            c.expect_eq(obj, "Rmax(modified) = csum_dim", hs.rmax_count(), static_cast<int>(ms.csum_last()));
            c.expect_eq(obj, "dim = asc + 1", static_cast<int>(ms.dim), x.asc() + 1);
            c.expect_eq(obj, "index = last + 1", static_cast<int>(ms.index), x.back() + 1);
            ++r.checked;
        });
    }
    return r;
}

/// avoider -> matrix through alpha: LRmax = rsum1, RLmin = csum_dim,
/// RLmax = ne, LRmin = tr.
inline CheckResult check_alpha_transport(std::size_t n_max) {
    CheckResult r{"alpha transport", n_max, 0, {}};
    detail::Checker c(r);
    for (std::size_t n = 1; n <= n_max && !c.failed(); ++n) {
        for_each_avoider(n, [&](const Permutation& p) {
            const auto ps = perm_stats(p);
            const auto ms = matrix_stats(alpha(p));
            const auto obj = to_text(p);
            c.expect_eq(obj, "LRmax = rsum1", ps.lrmax_count(), static_cast<int>(ms.rsum_first()));
            c.expect_eq(obj, "RLmin = csum_dim", ps.rlmin_count(), static_cast<int>(ms.csum_last()));
            c.expect_eq(obj, "RLmax = ne", ps.rlmax_count(), ms.ne());
            c.expect_eq(obj, "LRmin = tr", ps.lrmin_count(), ms.tr);
            ++r.checked;
        });
    }
    return r;
}

/// flip is an involution and swaps (rsum1, csum_dim) while fixing tr and ne.
inline CheckResult check_flip(std::size_t n_max) {
    CheckResult r{"flip", n_max, 0, {}};
    detail::Checker c(r);
    for (std::size_t n = 1; n <= n_max && !c.failed(); ++n) {
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
            const auto f = flip(a);
            const auto sa = matrix_stats(a);
            const auto sf = matrix_stats(f);
            const auto obj = to_text(a);
            c.expect_eq(obj, "flip(flip(A)) = A", to_text(flip(f)), obj);
            c.expect_eq(obj, "rsum1 -> csum_dim", static_cast<int>(sa.rsum_first()), static_cast<int>(sf.csum_last()));
            c.expect_eq(obj, "csum_dim -> rsum1", static_cast<int>(sa.csum_last()), static_cast<int>(sf.rsum_first()));
            c.expect_eq(obj, "tr", sa.tr, sf.tr);
            c.expect_eq(obj, "ne", sa.ne(), sf.ne());
            ++r.checked;
        });
    }
    return r;
}

inline void require_transport_cap(std::size_t n_max) {
    if (n_max == 0 || n_max > kTransportCap)
        throw std::out_of_range("n_max must be in 1.." + std::to_string(kTransportCap));
}

inline std::vector<CheckResult> check_transport(std::size_t n_max) {
    require_transport_cap(n_max);
    return {check_theta_transport(n_max), check_phi_transport(n_max), check_alpha_transport(n_max),
            check_flip(std::min<std::size_t>(n_max, 7))};
}

inline std::vector<CheckResult> check_round_trips(std::size_t n_max, std::size_t fg_n_max) {
    require_transport_cap(n_max);
    CheckResult perms{"theta_inv . theta = id", n_max, 0, {}};
    CheckResult seqs{"theta . theta_inv = id, psi . phi = id", n_max, 0, {}};
    CheckResult mats{"phi . psi = id, alpha_inv . alpha = id", n_max, 0, {}};
    CheckResult fg{"f(g(A, i)) = A, index(g(A, i)) = i + 1", fg_n_max, 0, {}};
    detail::Checker cp(perms), cs(seqs), cm(mats), cf(fg);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for_each_avoider(n, [&](const Permutation& p) {
            cp.expect_eq(to_text(p), "theta_inv(theta(p))", to_text(theta_inv(theta(p))), to_text(p));
            ++perms.checked;
        });
        for_each_ascent_sequence(n, [&](const std::vector<int>& v) {
            const AscentSequence x(v);
            cs.expect_eq(to_text(x), "theta(theta_inv(x))", to_text(theta(theta_inv(x))), to_text(x));
            cs.expect_eq(to_text(x), "psi(phi(x))", to_text(psi(phi(x))), to_text(x));
            ++seqs.checked;
        });
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
            cm.expect_eq(to_text(a), "phi(psi(A))", to_text(phi(psi(a))), to_text(a));
            cm.expect_eq(to_text(a), "alpha(alpha_inv(A))", to_text(alpha(alpha_inv(a))), to_text(a));
            ++mats.checked;
        });
    }
    for (std::size_t n = 1; n <= fg_n_max; ++n) {
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
            for (std::size_t i = 0; i <= a.dim(); ++i) {
                const auto grown = addition_g(a, i);
                const auto obj = to_text(a) + " @ i=" + std::to_string(i);
                cf.expect_eq(obj, "f(g(A, i))", to_text(removal_f(grown)), to_text(a));
                cf.expect_eq(obj, "index(g(A, i))", static_cast<int>(grown.index()), static_cast<int>(i + 1));
                ++fg.checked;
            }
        });
    }
    return {perms, seqs, mats, fg};
}

template <class BasicJson>
void to_json(BasicJson& j, const CheckResult& r) {
    j = BasicJson{{"name", r.name}, {"n_max", r.n_max}, {"checked", r.checked}, {"ok", r.ok()}};
    if (r.failure)
        j["counterexample"] = {{"object", r.failure->object},
                               {"statistic", r.failure->statistic},
                               {"lhs", r.failure->lhs},
                               {"rhs", r.failure->rhs}};
}

// ---------------------------------------------------------------------------
// Symmetry
// ---------------------------------------------------------------------------

struct SymmetryResult {
    std::size_t n = 0;
    JointTable matrices, sequences, avoiders;  // (rsum1, ne), (zero, Rmin), (LRmax, RLmax)

    bool symmetric() const {
        return check_symmetry(matrices) && check_symmetry(sequences) && check_symmetry(avoiders);
    }
    bool tables_agree() const {
        return matrices.counts == sequences.counts && matrices.counts == avoiders.counts;
    }
    bool ok() const { return symmetric() && tables_agree(); }
};

inline SymmetryResult check_symmetry_tables(std::size_t n) {
    return {n, joint_table(Family::matrices, "rsum1", "ne", n), joint_table(Family::sequences, "zero", "Rmin", n),
            joint_table(Family::avoiders, "LRmax", "RLmax", n)};
}

// ---------------------------------------------------------------------------
// Inverse vs flip
// ---------------------------------------------------------------------------

struct RemarkReport {
    Permutation perm, inverse;
    bool inverse_avoids = false;
    std::optional<AscentSequence> code, inverse_code;
    int asc = 0, inverse_asc = 0;
    std::size_t dim = 0, inverse_dim = 0;
    std::optional<FishburnMatrix> alpha_of_inverse, flip_of_alpha;
    bool equal = false;
};

inline RemarkReport check_remark(const Permutation& p) {
    if (contains_pattern(p)) throw std::invalid_argument("permutation contains the pattern");
    RemarkReport r;
    r.perm = p;
    r.inverse = p.inverse();
    r.code = theta(p);
    r.asc = r.code->asc();
    const auto a = phi(*r.code);
    r.dim = a.dim();
    r.flip_of_alpha = flip(flip(a));  // flip(alpha(p)) = flip(flip(phi(theta(p))))
    r.inverse_avoids = !contains_pattern(r.inverse);
    if (!r.inverse_avoids) return r;
    r.inverse_code = theta(r.inverse);
    r.inverse_asc = r.inverse_code->asc();
    const auto b = phi(*r.inverse_code);
    r.inverse_dim = b.dim();
    r.alpha_of_inverse = flip(b);
    r.equal = *r.alpha_of_inverse == *r.flip_of_alpha;
    return r;
}

template <class BasicJson>
void to_json(BasicJson& j, const RemarkReport& r) {
    j = BasicJson{{"perm", r.perm}, {"inverse", r.inverse}, {"inverse_avoids", r.inverse_avoids}};
    if (!r.inverse_avoids) {
        j["status"] = "inverse not an avoider";
        return;
    }
    j["theta"] = *r.code;
    j["theta_of_inverse"] = *r.inverse_code;
    j["asc"] = {r.asc, r.inverse_asc};
    j["dim"] = {r.dim, r.inverse_dim};
    j["alpha_of_inverse"] = *r.alpha_of_inverse;
    j["flip_of_alpha"] = *r.flip_of_alpha;
    j["equal"] = r.equal;
}

inline std::string to_text(const RemarkReport& r) {
    std::ostringstream os;
    os << "perm " << to_text(r.perm) << ", inverse " << to_text(r.inverse) << '\n';
    if (!r.inverse_avoids) {
        os << "inverse not an avoider\n";
        return os.str();
    }
    os << "theta(perm)    = " << to_text(*r.code) << "  (asc " << r.asc << ", dim " << r.dim << ")\n";
    os << "theta(inverse) = " << to_text(*r.inverse_code) << "  (asc " << r.inverse_asc << ", dim "
       << r.inverse_dim << ")\n";
    os << "alpha(inverse) " << (r.equal ? "==" : "!=") << " flip(alpha(perm))\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Full harness
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::size_t n_max = 7;
    std::size_t fg_n_max = 7;
    std::vector<std::string> only;  // empty = every section
    Permutation remark_perm{8, 5, 2, 3, 1, 6, 4, 7};

    static VerifyOptions profile(const std::string& name) {
        VerifyOptions o;
        if (name == "ci") o.n_max = 7;
        else if (name == "long") o.n_max = 8;
        else throw std::invalid_argument("unknown profile '" + name + "' (expected ci or long)");
        return o;
    }

    bool wants(const std::string& section) const {
        return only.empty() || std::find(only.begin(), only.end(), section) != only.end();
    }
};

inline const std::vector<std::string>& verify_sections() {
    static const std::vector<std::string> s{"counts", "roundtrip", "transport", "symmetry", "remark"};
    return s;
}

struct VerifyLine {
    std::string section;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    nlohmann::json json = nlohmann::json::object();

    bool ok() const {
        return std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.ok; });
    }
};

namespace detail {

inline std::string describe(const CheckResult& r) {
    std::ostringstream os;
    os << r.checked << " objects, n <= " << r.n_max;
    if (r.failure)
        os << "; counterexample " << r.failure->object << " [" << r.failure->statistic << "]: " << r.failure->lhs
           << " vs " << r.failure->rhs;
    return os.str();
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
    for (const auto& s : opt.only)
        if (std::find(verify_sections().begin(), verify_sections().end(), s) == verify_sections().end())
            throw std::invalid_argument("unknown section '" + s + "'");
    require_transport_cap(opt.n_max);
    VerifyReport rep;
    rep.json["n_max"] = opt.n_max;

    if (opt.wants("counts")) {
        const auto counts = cross_check_counts(opt.n_max);
        auto arr = nlohmann::json::array();
        for (const auto& c : counts.records) {
            arr.push_back({{"family", c.family},
                           {"n", c.n},
                           {"count", c.count},
                           {"expected", c.expected.str()},
                           {"status", c.ok ? "pass" : "fail"}});
            std::ostringstream d;
            d << c.count << " (expected " << c.expected << ")";
            rep.lines.push_back({"counts", c.family + " n=" + std::to_string(c.n), c.ok, d.str()});
        }
        rep.json["counts"] = std::move(arr);
    }
    if (opt.wants("roundtrip")) {
        auto results = check_round_trips(opt.n_max, opt.fg_n_max);
        for (const auto& r : results) rep.lines.push_back({"roundtrip", r.name, r.ok(), detail::describe(r)});
        rep.json["roundtrip"] = results;
    }
    if (opt.wants("transport")) {
        auto results = check_transport(opt.n_max);
        for (const auto& r : results) rep.lines.push_back({"transport", r.name, r.ok(), detail::describe(r)});
        rep.json["transport"] = results;
    }
    if (opt.wants("symmetry")) {
        auto arr = nlohmann::json::array();
        for (std::size_t n = 1; n <= opt.n_max; ++n) {
            const auto s = check_symmetry_tables(n);
            const std::string tag = " n=" + std::to_string(n);
            rep.lines.push_back({"symmetry", "(rsum1, ne) on matrices" + tag, check_symmetry(s.matrices), ""});
            rep.lines.push_back({"symmetry", "(zero, Rmin) on sequences" + tag, check_symmetry(s.sequences), ""});
            rep.lines.push_back({"symmetry", "(LRmax, RLmax) on avoiders" + tag, check_symmetry(s.avoiders), ""});
            rep.lines.push_back({"symmetry", "three tables coincide" + tag, s.tables_agree(), ""});
            arr.push_back({{"n", n}, {"matrices", s.matrices}, {"sequences", s.sequences}, {"avoiders", s.avoiders},
                           {"tables_agree", s.tables_agree()}});
        }
        rep.json["symmetry"] = std::move(arr);
    }
    if (opt.wants("remark")) {
        const auto r = check_remark(opt.remark_perm);
        std::ostringstream d;
        if (r.inverse_avoids)
            d << "asc " << r.asc << " vs " << r.inverse_asc << ", dim " << r.dim << " vs " << r.inverse_dim;
        else
            d << "inverse not an avoider";
        // The check passes when the counterexample is reproduced.
        rep.lines.push_back({"remark", "alpha(inverse) != flip(alpha) for " + to_text(r.perm),
                             r.inverse_avoids && !r.equal, d.str()});
        rep.json["remark"] = r;
    }
    auto lines = nlohmann::json::array();
    for (const auto& l : rep.lines)
        lines.push_back({{"section", l.section}, {"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    rep.json["checks"] = std::move(lines);
    rep.json["ok"] = rep.ok();
    return rep;
}

inline std::string to_text(const VerifyReport& rep) {
    std::ostringstream os;
    for (const auto& l : rep.lines) {
        os << (l.ok ? "PASS" : "FAIL") << "  [" << l.section << "] " << l.name;
        if (!l.detail.empty()) os << "  -- " << l.detail;
        os << '\n';
    }
    os << (rep.ok() ? "all checks passed" : "verification FAILED") << '\n';
    return os.str();
}

}  // namespace fishburn

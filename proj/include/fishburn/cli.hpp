#pragma once

// Command-line front end: enumerate | map | stats | table | verify | numbers.
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fishburn/bijections.hpp"
#include "fishburn/format.hpp"
#include "fishburn/objects.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/patterns.hpp"
#include "fishburn/statistics.hpp"
#include "fishburn/verify.hpp"

namespace fishburn::cli {

using Json = nlohmann::ordered_json;

enum class Kind { perm, seq, matrix };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr std::size_t kEnumerateCap = kFilterCap;
inline constexpr std::size_t kNumbersCap = 500;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Kind parse_kind(const std::string& s) {
    if (s == "perm" || s == "permutation") return Kind::perm;
    if (s == "seq" || s == "sequence") return Kind::seq;
    if (s == "matrix") return Kind::matrix;
    throw UsageError("unknown object kind '" + s + "' (expected perm, seq or matrix)");
}

inline bool looks_like_json(const std::string& s) {
    auto i = s.find_first_not_of(" \t\n");
    return i != std::string::npos && s[i] == '[';
}

template <class T>
T parse_object(const std::string& s);

template <>
inline Permutation parse_object<Permutation>(const std::string& s) {
    if (!looks_like_json(s)) return parse_permutation(s);
    try {
        return Json::parse(s).get<Permutation>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON permutation: ") + e.what());
    }
}

template <>
inline AscentSequence parse_object<AscentSequence>(const std::string& s) {
    if (!looks_like_json(s)) return parse_ascent_sequence(s);
    try {
        return Json::parse(s).get<AscentSequence>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON ascent sequence: ") + e.what());
    }
}

template <>
inline FishburnMatrix parse_object<FishburnMatrix>(const std::string& s) {
    if (!looks_like_json(s)) return parse_matrix(s);
    try {
        return Json::parse(s).get<FishburnMatrix>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON matrix: ") + e.what());
    }
}

// One reported quantity, carried in both output forms.
struct Field {
    std::string name;
    Json json;
    std::string text;
};

inline Field field(std::string name, int v) { return {std::move(name), v, std::to_string(v)}; }
inline Field field(std::string name, const std::vector<int>& v) {
    return {std::move(name), v, fishburn::detail::join(v)};
}
inline Field field(std::string name, const StatPolynomial& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
    return {std::move(name), std::move(j), p.to_string()};
}
inline Field field(std::string name, const std::string& s) { return {std::move(name), s, s}; }

inline void emit(std::ostream& out, const std::vector<Field>& fields, bool json) {
    if (json) {
        Json j = Json::object();
        for (const auto& f : fields) j[f.name] = f.json;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& f : fields) out << f.name << ": " << f.text << '\n';
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

inline std::vector<Field> perm_fields(const Permutation& p) {
    const auto st = perm_stats(p);
    return {
        field("perm", to_text(p)),
        field("sites", labeled_sites_text(p)),
        field("theta", to_text(theta(p))),
        field("LRMAX", st.lrmax),
        field("LRmax", st.lrmax_count()),
        field("LRMIN", st.lrmin),
        field("LRmin", st.lrmin_count()),
        field("RLMAX", st.rlmax),
        field("RLmax", st.rlmax_count()),
        field("RLMIN", st.rlmin),
        field("RLmin", st.rlmin_count()),
        field("LMAXL", st.lmaxl),
        field("RMAXL", st.rmaxl),
        field("delta", st.delta),
        field("s", st.s),
        field("a", st.a),
    };
}

inline std::vector<Field> seq_fields(const AscentSequence& x) {
    const auto st = seq_stats(x);
    const auto hat = modified_sequence(x);
    const auto hs = seq_stats(hat);
    return {
        field("seq", to_text(x)),
        field("ASC", st.asc_set),
        field("asc", x.asc()),
        field("zero", st.zero),
        field("max", st.maxstat),
        field("RMIN", values_at(x.values(), st.rmin_indices)),
        field("Rmin", st.rmin_count()),
        field("Rmax", st.rmax_count()),
        field("modified", hat),
        field("Rmax_hat", hs.rmax_count()),
        field("chi_hat", hs.chi),
    };
}

inline std::vector<Field> matrix_fields(const FishburnMatrix& a) {
    const auto st = matrix_stats(a);
    std::vector<int> rsum(st.rsum.begin(), st.rsum.end()), csum(st.csum.begin(), st.csum.end());
    Json cells = Json::array();
    std::ostringstream cells_text;
    for (const auto& [r, c] : st.ne_cells) {
        cells.push_back({r, c});
        cells_text << (cells.size() > 1 ? " " : "") << '(' << r << ',' << c << ')';
    }
    return {
        field("matrix", to_text(a)),
        field("weight", a.weight()),
        field("dim", static_cast<int>(st.dim)),
        field("index", static_cast<int>(st.index)),
        field("rsum", rsum),
        field("csum", csum),
        field("rsum1", st.rsum_first()),
        field("csum_dim", st.csum_last()),
        field("tr", st.tr),
        field("ne", st.ne()),
        field("NE", st.ne_rows),
        Field{"wNE_cells", std::move(cells), cells_text.str()},
        field("lambda", st.lambda),
    };
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

struct MapResult {
    Json value;
    std::string text;
    std::vector<std::string> chain;  // human-readable steps
    Json chain_json = Json::array();
};

template <class T>
void set_value(MapResult& r, const T& obj) {
    r.value = obj;
    r.text = to_text(obj);
}

inline void insertion_steps(MapResult& r, const AscentSequence& x) {
    const auto chain = insertion_chain(x);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto sites = labeled_sites_text(chain[k]);
        r.chain.push_back(k == 0 ? sites : "x_" + std::to_string(k + 1) + "=" + std::to_string(x[k]) + " -> " + sites);
        r.chain_json.push_back({{"step", k + 1}, {"label", x[k]}, {"perm", chain[k]}, {"sites", sites}});
    }
}

inline void addition_steps(MapResult& r, const AscentSequence& x) {
    const auto chain = phi_chain(x);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        r.chain.push_back("A^(" + std::to_string(k + 1) + ")" +
                          (k == 0 ? std::string() : " = g(A^(" + std::to_string(k) + "), " + std::to_string(x[k]) + ")") +
                          ":\n" + to_grid(chain[k]));
        r.chain_json.push_back({{"step", k + 1}, {"i", x[k]}, {"matrix", chain[k]}});
    }
}

inline void removal_steps(MapResult& r, const FishburnMatrix& a) {
    const auto chain = removal_chain(a);
    for (std::size_t k = chain.size(); k-- > 0;) {
        r.chain.push_back("A^(" + std::to_string(k + 1) + "), index " + std::to_string(chain[k].index()) + ":\n" +
                          to_grid(chain[k]));
        r.chain_json.push_back({{"step", k + 1}, {"index", chain[k].index()}, {"matrix", chain[k]}});
    }
}

inline MapResult map_object(Kind from, Kind to, const std::string& object, const std::string& via, bool chain) {
    if (via != "alpha" && via != "phi") throw UsageError("--via must be alpha or phi");
    const bool through_flip = via == "alpha";
    MapResult r;
    if (from == Kind::perm && to == Kind::seq) {
        const auto x = theta(parse_object<Permutation>(object));
        set_value(r, x);
        if (chain) insertion_steps(r, x);
    } else if (from == Kind::seq && to == Kind::perm) {
        const auto x = parse_object<AscentSequence>(object);
        set_value(r, theta_inv(x));
        if (chain) insertion_steps(r, x);
    } else if (from == Kind::seq && to == Kind::matrix) {
        const auto x = parse_object<AscentSequence>(object);
        set_value(r, phi(x));
        if (chain) addition_steps(r, x);
    } else if (from == Kind::matrix && to == Kind::seq) {
        const auto a = parse_object<FishburnMatrix>(object);
        set_value(r, psi(a));
        if (chain) removal_steps(r, a);
    } else if (from == Kind::perm && to == Kind::matrix) {
        const auto x = theta(parse_object<Permutation>(object));
        const auto a = phi(x);
        set_value(r, through_flip ? flip(a) : a);
        if (chain) {
            insertion_steps(r, x);
            addition_steps(r, x);
            if (through_flip) r.chain.push_back("flip:\n" + to_grid(flip(a)));
        }
    } else if (from == Kind::matrix && to == Kind::perm) {
        const auto m = parse_object<FishburnMatrix>(object);
        const auto a = through_flip ? flip(m) : m;
        const auto x = psi(a);
        set_value(r, theta_inv(x));
        if (chain) {
            if (through_flip) r.chain.push_back("flip:\n" + to_grid(a));
            removal_steps(r, a);
            insertion_steps(r, x);
        }
    } else if (from == Kind::matrix && to == Kind::matrix) {
        set_value(r, flip(parse_object<FishburnMatrix>(object)));
    } else {
        throw UsageError("unsupported mapping; arrows are perm<->seq, seq<->matrix, perm<->matrix, matrix->matrix (flip)");
    }
    return r;
}

// ---------------------------------------------------------------------------
// enumerate / numbers
// ---------------------------------------------------------------------------

inline void enumerate(std::ostream& out, Family family, std::size_t n, bool json) {
    if (n == 0) throw UsageError("n must be at least 1");
    if (n > kEnumerateCap)
        throw UsageError("n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                         std::to_string(kEnumerateCap) + "; use `numbers " + std::to_string(n) +
                         "` for counts only");
    Json arr = Json::array();
    auto put = [&](const auto& obj) {
        if (json) arr.push_back(obj);
        else out << to_text(obj) << '\n';
    };
    switch (family) {
    case Family::avoiders: for_each_avoider(n, put); break;
    case Family::sequences:
        for_each_ascent_sequence(n, [&](const std::vector<int>& xs) { put(AscentSequence(xs)); });
        break;
    case Family::matrices: for_each_fishburn_matrix(n, put); break;
    }
    if (json) out << arr.dump() << '\n';
}

inline Json big_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return v.str();
}

inline void numbers(std::ostream& out, std::size_t max_n, bool json) {
    if (max_n == 0 || max_n > kNumbersCap)
        throw UsageError("N must be in 1.." + std::to_string(kNumbersCap));
    const auto fib = fishburn_numbers(max_n);
    Json arr = Json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (json) arr.push_back({{"n", n}, {"F", big_to_json(fib[n])}});
        else out << n << ' ' << fib[n] << '\n';
    }
    if (json) out << arr.dump() << '\n';
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fishburn families: avoiders, ascent sequences, Fishburn matrices", "fishburn"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string family_name, kind_a, kind_b, object, via = "alpha", stat_a, stat_b, profile;
    std::size_t n = 0;
    bool chain = false;
    std::vector<std::string> only;
    std::string remark;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every object of a family");
    enumerate_cmd->add_option("family", family_name, "avoiders | sequences | matrices")->required();
    enumerate_cmd->add_option("n", n, "Size")->required();
    add_format(enumerate_cmd, format);

    auto* map_cmd = app.add_subcommand("map", "Apply a bijection");
    map_cmd->add_option("source", kind_a, "perm | seq | matrix")->required();
    map_cmd->add_option("target", kind_b, "perm | seq | matrix")->required();
    map_cmd->add_option("object", object, "Object in text or JSON form")->required();
    map_cmd->add_option("--via", via, "Route between perm and matrix: alpha (flip . phi . theta) or phi");
    map_cmd->add_flag("--chain", chain, "Print the intermediate insertion or matrix steps");
    add_format(map_cmd, format);

    auto* stats_cmd = app.add_subcommand("stats", "Print every statistic of an object");
    stats_cmd->add_option("kind", kind_a, "perm | seq | matrix")->required();
    stats_cmd->add_option("object", object, "Object in text or JSON form")->required();
    add_format(stats_cmd, format);

    auto* table_cmd = app.add_subcommand("table", "Joint distribution of two statistics");
    table_cmd->add_option("family", family_name, "avoiders | sequences | matrices")->required();
    table_cmd->add_option("stat_a", stat_a, "Row statistic")->required();
    table_cmd->add_option("stat_b", stat_b, "Column statistic")->required();
    table_cmd->add_option("n", n, "Size")->required();
    add_format(table_cmd, format);

    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification harness");
    verify_cmd->add_option("profile", profile, "ci (n <= 7) | long (n <= 8)")
        ->required()
        ->check(CLI::IsMember({"ci", "long"}));
    verify_cmd->add_option("--only", only, "Restrict to sections: counts roundtrip transport symmetry remark");
    verify_cmd->add_option("--remark", remark, "Permutation for the inverse-vs-flip check (default 8 5 2 3 1 6 4 7)");
    add_format(verify_cmd, format);

    auto* numbers_cmd = app.add_subcommand("numbers", "Fishburn numbers F_0..F_N from the generating function");
    numbers_cmd->add_option("N", n, "Largest index")->required();
    add_format(numbers_cmd, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    const bool json = format == "json";
    try {
        if (*enumerate_cmd) {
            enumerate(out, parse_family(family_name), n, json);
        } else if (*map_cmd) {
            auto r = map_object(parse_kind(kind_a), parse_kind(kind_b), object, via, chain);
            if (json) {
                Json j{{"result", r.value}};
                if (chain) j["chain"] = r.chain_json;
                out << j.dump() << '\n';
            } else {
                for (const auto& step : r.chain) out << step << (step.ends_with('\n') ? "" : "\n");
                out << r.text << '\n';
            }
        } else if (*stats_cmd) {
            switch (parse_kind(kind_a)) {
            case Kind::perm: emit(out, perm_fields(parse_object<Permutation>(object)), json); break;
            case Kind::seq: emit(out, seq_fields(parse_object<AscentSequence>(object)), json); break;
            case Kind::matrix: emit(out, matrix_fields(parse_object<FishburnMatrix>(object)), json); break;
            }
        } else if (*table_cmd) {
            const auto t = joint_table(parse_family(family_name), stat_a, stat_b, n);
            if (json) out << nlohmann::json(t).dump() << '\n';
            else out << to_text(t);
        } else if (*verify_cmd) {
            auto opt = VerifyOptions::profile(profile);
            opt.only = only;
            if (!remark.empty()) opt.remark_perm = parse_object<Permutation>(remark);
            const auto rep = run_verification(opt);
            if (json) out << rep.json.dump() << '\n';
            else out << to_text(rep);
            return rep.ok() ? kExitOk : kExitFailed;
        } else if (*numbers_cmd) {
            numbers(out, n, json);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"fishburn"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fishburn::cli

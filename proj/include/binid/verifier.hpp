#ifndef BINID_VERIFIER_HPP
#define BINID_VERIFIER_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include <binid/dsl/expand.hpp>
#include <binid/dsl/parser.hpp>
#include <binid/identities.hpp>
#include <binid/multipoly.hpp>
#include <binid/rational.hpp>

namespace binid
{

enum class Method { Expand, Evaluate, Both };
enum class Status { Pass, Fail, Error };

inline const char *to_string(Method m)
{
    switch (m) {
        case Method::Expand:
            return "EXPAND";
        case Method::Evaluate:
            return "EVALUATE";
        case Method::Both:
            return "BOTH";
    }
    return "?";
}

inline const char *to_string(Status s)
{
    switch (s) {
        case Status::Pass:
            return "PASS";
        case Status::Fail:
            return "FAIL";
        case Status::Error:
            return "ERROR";
    }
    return "?";
}

// Accepts the command-line spelling (lowercase) and the report spelling.
inline std::optional<Method> parse_method(std::string_view s)
{
    for (auto m : {Method::Expand, Method::Evaluate, Method::Both}) {
        std::string_view upper = to_string(m);
        if (s.size() == upper.size() &&
            std::equal(s.begin(), s.end(), upper.begin(), [](char a, char b) { return std::toupper(static_cast<unsigned char>(a)) == b; })) {
            return m;
        }
    }
    return std::nullopt;
}

struct VerifyConfig {
    unsigned m_min = 0;
    unsigned m_max = 20;
    Method method = Method::Both;
    unsigned evaluation_points = 50;
    std::uint64_t seed = 42;
    bool parallel = true;

    bool uses_evaluation() const { return method != Method::Expand; }
    bool uses_expansion() const { return method != Method::Evaluate; }

    void validate() const
    {
        if (m_min > m_max) {
            throw std::invalid_argument("empty m range");
        }
        if (uses_evaluation() && evaluation_points == 0) {
            throw std::invalid_argument("evaluation needs at least one point");
        }
    }
};

using Point = std::vector<std::pair<std::string, Rational>>;

struct Witness {
    // Leading monomial of the nonzero difference (only from expansion).
    std::optional<std::string> monomial;
    std::optional<std::string> coefficient;
    // Which chain link disagreed with the left-hand side.
    std::size_t link = 1;
    Point point;
    Rational lhs_value;
    Rational rhs_value;
};

struct MRecord {
    unsigned m = 0;
    Status status = Status::Pass;
    // Terms in the expanded difference; -1 when only evaluation ran.
    long long diff_terms = 0;
    long long millis = 0;
    std::optional<Witness> witness;
    std::optional<std::string> error;
};

struct VerifyReport {
    std::string target;
    VerifyConfig config;
    std::vector<MRecord> records;
    Status aggregate = Status::Pass;
    // Set when the target itself could not be built (e.g. a parse error).
    std::optional<std::string> error;
};

// Something to verify: per m, a chain of expressions that must all be equal,
// computable both symbolically and at a rational point.
struct Target {
    std::string name;
    std::vector<std::string> variables;
    std::function<Chain<MultiPoly>(unsigned)> symbolic;
    std::function<Chain<Rational>(unsigned, const std::map<std::string, Rational> &)> numeric;
};

// ---------------------------------------------------------------------------
// Built-in targets.

enum class Variant {
    Theorem,        // EQ_1_2
    TheoremShifted, // EQ_1_3
    Classic,        // EQ_1_1
    ClassicShifted, // EQ_1_4
    Reflected,      // COR_1_3
    Gould,          // GOULD_SUBSTITUTED
    StepA,
    StepB,
    StepC,
    StepD,
    StepE,
};

inline constexpr Variant all_variants[] = {Variant::Theorem, Variant::TheoremShifted, Variant::Classic,
                                           Variant::ClassicShifted, Variant::Reflected, Variant::Gould,
                                           Variant::StepA, Variant::StepB, Variant::StepC,
                                           Variant::StepD, Variant::StepE};

inline const char *variant_name(Variant v)
{
    switch (v) {
        case Variant::Theorem:
            return "EQ_1_2";
        case Variant::TheoremShifted:
            return "EQ_1_3";
        case Variant::Classic:
            return "EQ_1_1";
        case Variant::ClassicShifted:
            return "EQ_1_4";
        case Variant::Reflected:
            return "COR_1_3";
        case Variant::Gould:
            return "GOULD_SUBSTITUTED";
        case Variant::StepA:
            return "STEP_A";
        case Variant::StepB:
            return "STEP_B";
        case Variant::StepC:
            return "STEP_C";
        case Variant::StepD:
            return "STEP_D";
        case Variant::StepE:
            return "STEP_E";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s)
{
    for (auto v : all_variants) {
        if (s == variant_name(v)) {
            return v;
        }
    }
    return std::nullopt;
}

template <Algebra R>
Chain<R> builtin_chain(Variant variant, unsigned m, const Vars<R> &v)
{
    switch (variant) {
        case Variant::Theorem:
            return {theorem_lhs(m, v), theorem_rhs(m, v)};
        case Variant::TheoremShifted:
            return {shifted_lhs(m, v), shifted_rhs(m, v)};
        case Variant::Classic:
            return classic_chain(m, v);
        case Variant::ClassicShifted:
            return classic_shifted_chain(m, v);
        case Variant::Reflected:
            return {reflected_lhs(m, v), reflected_rhs(m, v)};
        case Variant::Gould:
            return gould_chain(m, v);
        case Variant::StepA:
            return single_extraction_chain(m, v);
        case Variant::StepB:
            return squared_extraction_chain(m, v);
        case Variant::StepC:
            return denominator_split_chain(m, v);
        case Variant::StepD:
            return m == 0 ? derivative_relation_direct(m, v) : derivative_relation_route(m, v);
        case Variant::StepE:
            return final_combination_chain(m, v);
    }
    throw std::invalid_argument("unknown variant");
}

inline Target builtin_target(Variant variant)
{
    Target t;
    t.name = variant_name(variant);
    t.variables = {"x", "y", "z"};
    t.symbolic = [variant](unsigned m) { return builtin_chain(variant, m, symbolic_vars()); };
    t.numeric = [variant](unsigned m, const std::map<std::string, Rational> &p) {
        return builtin_chain(variant, m, Vars<Rational>{p.at("x"), p.at("y"), p.at("z")});
    };
    return t;
}

inline Target file_target(const dsl::IdentityAst &ast, std::string name)
{
    Target t;
    t.name = std::move(name);
    t.variables = dsl::ring_for(ast)->names();
    t.symbolic = [ast](unsigned m) {
        auto sides = dsl::expand(ast, m);
        return Chain<MultiPoly>{std::move(sides.lhs), std::move(sides.rhs)};
    };
    t.numeric = [ast](unsigned m, const std::map<std::string, Rational> &p) {
        auto sides = dsl::expand_sides<Rational>(ast, m, Rational(0), p);
        return Chain<Rational>{std::move(sides.lhs), std::move(sides.rhs)};
    };
    return t;
}

// ---------------------------------------------------------------------------
// Seeded evaluation points.

namespace detail
{

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

inline constexpr long point_numerator_bound = 1000000;
inline constexpr long point_denominator_bound = 1000;

// Deterministic point keyed by (seed, target, m, index): numerators uniform
// in [-10^6, 10^6], denominators uniform in [1, 10^3].
inline Point random_point(std::uint64_t seed, std::string_view target, unsigned m, std::uint64_t index,
                          const std::vector<std::string> &variables)
{
    std::uint64_t key = detail::splitmix64(seed);
    key = detail::splitmix64(key ^ detail::fnv1a(target));
    key = detail::splitmix64(key ^ m);
    key = detail::splitmix64(key ^ index);
    std::mt19937_64 gen(key);
    std::uniform_int_distribution<long> num(-point_numerator_bound, point_numerator_bound);
    std::uniform_int_distribution<long> den(1, point_denominator_bound);
    Point p;
    for (const auto &v : variables) {
        long a = num(gen);
        long b = den(gen);
        p.emplace_back(v, Rational(mpz_class(a), mpz_class(b)));
    }
    return p;
}

inline std::map<std::string, Rational> as_map(const Point &p)
{
    return {p.begin(), p.end()};
}

// ---------------------------------------------------------------------------
// Running.

namespace detail
{

// Index of the first chain element differing from element 0, if any.
template <typename R>
std::optional<std::size_t> first_mismatch(const Chain<R> &chain)
{
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!(chain[i] == chain[0])) {
            return i;
        }
    }
    return std::nullopt;
}

// Witness search: seeded points are tried in order until the difference is
// nonzero there.
constexpr std::uint64_t witness_index_base = 1ULL << 40;
constexpr std::uint64_t witness_attempts = 64;

inline MRecord run_expand(const Target &t, unsigned m, const VerifyConfig &cfg)
{
    MRecord rec;
    rec.m = m;
    auto chain = t.symbolic(m);
    auto bad = first_mismatch(chain);
    if (!bad) {
        return rec;
    }
    MultiPoly diff = chain[0] - chain[*bad];
    rec.status = Status::Fail;
    rec.diff_terms = static_cast<long long>(diff.term_count());
    Witness w;
    w.link = *bad;
    auto lead = diff.leading_term();
    w.monomial = render_monomial(*diff.ring(), lead->first);
    if (w.monomial->empty()) {
        w.monomial = "1";
    }
    w.coefficient = lead->second.to_string();
    for (std::uint64_t k = 0; k < witness_attempts; ++k) {
        auto p = random_point(cfg.seed, t.name, m, witness_index_base + k, t.variables);
        auto pm = as_map(p);
        if (!poly_eval(diff, pm).is_zero()) {
            w.point = std::move(p);
            w.lhs_value = poly_eval(chain[0], pm);
            w.rhs_value = poly_eval(chain[*bad], pm);
            break;
        }
    }
    rec.witness = std::move(w);
    return rec;
}

inline MRecord run_evaluate(const Target &t, unsigned m, const VerifyConfig &cfg)
{
    MRecord rec;
    rec.m = m;
    for (std::uint64_t k = 0; k < cfg.evaluation_points; ++k) {
        auto p = random_point(cfg.seed, t.name, m, k, t.variables);
        auto values = t.numeric(m, as_map(p));
        if (auto bad = first_mismatch(values)) {
            rec.status = Status::Fail;
            Witness w;
            w.link = *bad;
            w.point = std::move(p);
            w.lhs_value = values[0];
            w.rhs_value = values[*bad];
            rec.witness = std::move(w);
            return rec;
        }
    }
    return rec;
}

inline MRecord run_one(const Target &t, unsigned m, const VerifyConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    MRecord rec;
    rec.m = m;
    try {
        std::optional<MRecord> expanded;
        if (cfg.uses_expansion()) {
            expanded = run_expand(t, m, cfg);
        }
        std::optional<MRecord> evaluated;
        if (cfg.uses_evaluation()) {
            evaluated = run_evaluate(t, m, cfg);
        }
        if (expanded) {
            rec = *expanded;
            if (evaluated && evaluated->status == Status::Fail && rec.status == Status::Pass) {
                // Expansion says zero but a point disagrees; cannot happen for
                // a sound engine, report it rather than hide it.
                rec.status = Status::Fail;
                rec.witness = evaluated->witness;
            }
        } else {
            rec = *evaluated;
            rec.diff_terms = -1;
        }
    } catch (const std::exception &e) {
        rec = MRecord{};
        rec.m = m;
        rec.status = Status::Error;
        rec.diff_terms = -1;
        rec.error = e.what();
    }
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

inline Status aggregate_of(const std::vector<MRecord> &records)
{
    bool failed = false;
    for (const auto &r : records) {
        if (r.status == Status::Error) {
            return Status::Error;
        }
        failed = failed || r.status == Status::Fail;
    }
    return failed ? Status::Fail : Status::Pass;
}

} // namespace detail

// Runs every m of the configured range. Records come back in ascending m
// whatever the execution order.
inline VerifyReport verify_target(const Target &target, const VerifyConfig &cfg)
{
    cfg.validate();
    VerifyReport report;
    report.target = target.name;
    report.config = cfg;
    const std::size_t count = cfg.m_max - cfg.m_min + 1;
    report.records.resize(count);

    std::size_t workers = 1;
    if (cfg.parallel) {
        workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
    }
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            report.records[i] = detail::run_one(target, cfg.m_min + static_cast<unsigned>(i), cfg);
        }
    } else {
        // Largest m first: it dominates the run time.
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k = next++; k < count; k = next++) {
                const std::size_t i = count - 1 - k;
                report.records[i] = detail::run_one(target, cfg.m_min + static_cast<unsigned>(i), cfg);
            }
        };
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    report.aggregate = detail::aggregate_of(report.records);
    return report;
}

inline VerifyReport verify_builtin(Variant variant, const VerifyConfig &cfg)
{
    return verify_target(builtin_target(variant), cfg);
}

// Verifies an identity file's source text. A lexical, syntax or scope error
// yields an ERROR report without per-m records.
inline VerifyReport verify_file(std::string_view source, const VerifyConfig &cfg, std::string name = "file")
{
    dsl::IdentityAst ast;
    try {
        ast = dsl::parse(source);
    } catch (const dsl::DslError &e) {
        VerifyReport report;
        report.target = std::move(name);
        report.config = cfg;
        report.aggregate = Status::Error;
        report.error = e.what();
        return report;
    }
    return verify_target(file_target(ast, std::move(name)), cfg);
}

// ---------------------------------------------------------------------------
// JSON.

struct SerializeOptions {
    // Wall times vary run to run; off gives byte-reproducible output.
    bool timings = true;
};

inline nlohmann::ordered_json to_json(const VerifyConfig &cfg)
{
    nlohmann::ordered_json j;
    j["mMin"] = cfg.m_min;
    j["mMax"] = cfg.m_max;
    j["method"] = to_string(cfg.method);
    j["evaluationPoints"] = cfg.evaluation_points;
    j["seed"] = cfg.seed;
    return j;
}

inline nlohmann::ordered_json to_json(const Witness &w)
{
    nlohmann::ordered_json j;
    j["monomial"] = w.monomial ? nlohmann::ordered_json(*w.monomial) : nlohmann::ordered_json(nullptr);
    j["coefficient"] = w.coefficient ? nlohmann::ordered_json(*w.coefficient) : nlohmann::ordered_json(nullptr);
    j["link"] = w.link;
    nlohmann::ordered_json point = nlohmann::ordered_json::object();
    for (const auto &[name, value] : w.point) {
        point[name] = value.to_string();
    }
    j["point"] = std::move(point);
    j["lhs"] = w.lhs_value.to_string();
    j["rhs"] = w.rhs_value.to_string();
    return j;
}

inline nlohmann::ordered_json to_json(const VerifyReport &report, const SerializeOptions &opts = {})
{
    nlohmann::ordered_json j;
    j["target"] = report.target;
    j["config"] = to_json(report.config);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto &r : report.records) {
        nlohmann::ordered_json rec;
        rec["m"] = r.m;
        rec["status"] = to_string(r.status);
        rec["diffTerms"] = r.diff_terms;
        rec["millis"] = opts.timings ? r.millis : 0;
        rec["witness"] = r.witness ? to_json(*r.witness) : nlohmann::ordered_json(nullptr);
        if (r.error) {
            rec["error"] = *r.error;
        }
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    j["aggregate"] = to_string(report.aggregate);
    if (report.error) {
        j["error"] = *report.error;
    }
    return j;
}

inline std::string serialize(const VerifyReport &report, const SerializeOptions &opts = {})
{
    return to_json(report, opts).dump(2);
}

} // namespace binid

#endif

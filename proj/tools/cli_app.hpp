#ifndef BINID_TOOLS_CLI_APP_HPP
#define BINID_TOOLS_CLI_APP_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <binid/binid.hpp>

namespace binid::cli
{

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_error = 2;

struct MRangeArg {
    unsigned lo = 0;
    unsigned hi = 0;
};

// "A..B" or "A".
inline std::optional<MRangeArg> parse_m_range(const std::string &text)
{
    auto parse_u = [](const std::string &s) -> std::optional<unsigned> {
        if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
            return std::nullopt;
        }
        return static_cast<unsigned>(std::stoul(s));
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse_u(text);
        if (!v) {
            return std::nullopt;
        }
        return MRangeArg{*v, *v};
    }
    auto lo = parse_u(text.substr(0, dots));
    auto hi = parse_u(text.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) {
        return std::nullopt;
    }
    return MRangeArg{*lo, *hi};
}

struct CommonOptions {
    bool json = false;
    std::string out;
    std::uint64_t seed = 42;
    unsigned points = 50;
    std::string method = "both";
    bool no_parallel = false;
    bool no_timings = false;
};

inline void add_common(CLI::App *cmd, CommonOptions &o)
{
    cmd->add_flag("--json", o.json, "Print only the JSON report on stdout");
    cmd->add_option("--out", o.out, "Also write the JSON report to FILE");
    cmd->add_option("--seed", o.seed, "Seed for evaluation points");
    cmd->add_option("--points", o.points, "Evaluation points per m")->check(CLI::PositiveNumber);
    cmd->add_option("--method", o.method, "expand | evaluate | both")
        ->check(CLI::IsMember({"expand", "evaluate", "both"}));
    cmd->add_flag("--no-parallel", o.no_parallel, "Run the m values sequentially");
    cmd->add_flag("--no-timings", o.no_timings, "Write 0 for every millis field");
}

inline VerifyConfig make_config(const CommonOptions &o, unsigned lo, unsigned hi)
{
    VerifyConfig cfg;
    cfg.m_min = lo;
    cfg.m_max = hi;
    cfg.method = *parse_method(o.method);
    cfg.evaluation_points = o.points;
    cfg.seed = o.seed;
    cfg.parallel = !o.no_parallel;
    return cfg;
}

inline Status combine(const std::vector<VerifyReport> &reports)
{
    bool failed = false;
    for (const auto &r : reports) {
        if (r.aggregate == Status::Error) {
            return Status::Error;
        }
        failed = failed || r.aggregate == Status::Fail;
    }
    return failed ? Status::Fail : Status::Pass;
}

inline void print_table(const VerifyReport &r, std::ostream &err)
{
    err << r.target << "  m=" << r.config.m_min << ".." << r.config.m_max << "  method=" << to_string(r.config.method)
        << "  " << to_string(r.aggregate) << "\n";
    if (r.error) {
        err << "  " << *r.error << "\n";
    }
    for (const auto &rec : r.records) {
        err << "  m=" << std::setw(3) << rec.m << "  " << std::left << std::setw(5) << to_string(rec.status)
            << std::right << "  diffTerms=" << rec.diff_terms << "  " << rec.millis << " ms\n";
        if (rec.witness) {
            const auto &w = *rec.witness;
            if (w.monomial) {
                err << "         leading term " << *w.coefficient << " * " << *w.monomial << "\n";
            }
            err << "         witness";
            for (const auto &[name, value] : w.point) {
                err << " " << name << "=" << value;
            }
            err << "  lhs=" << w.lhs_value << "  link" << w.link << "=" << w.rhs_value << "\n";
        }
        if (rec.error) {
            err << "         " << *rec.error << "\n";
        }
    }
}

// Emits reports and maps the combined status to the exit code.
inline int finish(const std::vector<VerifyReport> &reports, const CommonOptions &o, std::ostream &out,
                  std::ostream &err)
{
    SerializeOptions so;
    so.timings = !o.no_timings;
    const Status total = combine(reports);
    nlohmann::ordered_json doc;
    if (reports.size() == 1) {
        doc = to_json(reports.front(), so);
    } else {
        doc["reports"] = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            doc["reports"].push_back(to_json(r, so));
        }
        doc["aggregate"] = to_string(total);
    }
    const std::string text = doc.dump(2) + "\n";
    if (o.json) {
        out << text;
    } else {
        for (const auto &r : reports) {
            print_table(r, err);
        }
        err << "aggregate " << to_string(total) << "\n";
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f || !(f << text)) {
            err << "error: cannot write " << o.out << "\n";
            return exit_error;
        }
    }
    switch (total) {
        case Status::Pass:
            return exit_pass;
        case Status::Fail:
            return exit_fail;
        case Status::Error:
            return exit_error;
    }
    return exit_error;
}

inline std::vector<std::string> split_commas(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of the generalized curious binomial identity", "binid"};
    app.require_subcommand(1);

    CommonOptions theorem_opts;
    unsigned theorem_m_max = 20;
    std::string theorem_eq = "both";
    auto *theorem = app.add_subcommand("verify-theorem", "Verify both forms of the generalized identity");
    theorem->add_option("--m-max", theorem_m_max, "Largest m (range starts at 0)");
    theorem->add_option("--eq", theorem_eq, "1.2 | 1.3 | both")->check(CLI::IsMember({"1.2", "1.3", "both"}));
    add_common(theorem, theorem_opts);

    CommonOptions cor_opts;
    unsigned cor_m_max = 20;
    std::string cor_which = "both";
    auto *cor = app.add_subcommand("verify-corollaries", "Verify the z = 1 specializations and the reflection");
    cor->add_option("--which", cor_which, "1.2 | 1.3 | both")->check(CLI::IsMember({"1.2", "1.3", "both"}));
    cor->add_option("--m-max", cor_m_max, "Largest m (range starts at 0)");
    add_common(cor, cor_opts);

    CommonOptions steps_opts;
    unsigned steps_m_max = 12;
    std::string steps_list = "a,b,c,d,e";
    auto *steps = app.add_subcommand("verify-proof-steps", "Replay the generating-function proof step by step");
    steps->add_option("--steps", steps_list, "Comma separated subset of a,b,c,d,e");
    steps->add_option("--m-max", steps_m_max, "Largest m (range starts at 0)");
    add_common(steps, steps_opts);

    CommonOptions gould_opts;
    unsigned gould_order = 24;
    auto *gould = app.add_subcommand("verify-gould", "Verify the substituted Lambert/Gould series coefficientwise");
    gould->add_option("--order", gould_order, "Highest t power checked");
    add_common(gould, gould_opts);

    CommonOptions check_opts;
    std::string check_file;
    std::string check_range = "0..12";
    auto *check = app.add_subcommand("check", "Verify an identity file");
    check->add_option("FILE", check_file, "Identity file")->required();
    check->add_option("--m", check_range, "Parameter values, A..B or a single value");
    add_common(check, check_opts);

    std::string expand_expr;
    bool expand_json = false;
    auto *expand = app.add_subcommand("expand", "Expand an expression to canonical form");
    expand->add_option("EXPR", expand_expr, "Expression in identity-file syntax")->required();
    expand->add_flag("--json", expand_json, "Print a JSON object instead of plain text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_error;
    }

    try {
        if (*theorem) {
            std::vector<VerifyReport> reports;
            auto cfg = make_config(theorem_opts, 0, theorem_m_max);
            if (theorem_eq != "1.3") {
                reports.push_back(verify_builtin(Variant::Theorem, cfg));
            }
            if (theorem_eq != "1.2") {
                reports.push_back(verify_builtin(Variant::TheoremShifted, cfg));
            }
            return finish(reports, theorem_opts, out, err);
        }
        if (*cor) {
            std::vector<VerifyReport> reports;
            auto cfg = make_config(cor_opts, 0, cor_m_max);
            if (cor_which != "1.3") {
                reports.push_back(verify_builtin(Variant::Classic, cfg));
                reports.push_back(verify_builtin(Variant::ClassicShifted, cfg));
            }
            if (cor_which != "1.2") {
                reports.push_back(verify_builtin(Variant::Reflected, cfg));
            }
            return finish(reports, cor_opts, out, err);
        }
        if (*steps) {
            std::vector<VerifyReport> reports;
            auto cfg = make_config(steps_opts, 0, steps_m_max);
            for (const auto &s : split_commas(steps_list)) {
                Variant v;
                if (s == "a") {
                    v = Variant::StepA;
                } else if (s == "b") {
                    v = Variant::StepB;
                } else if (s == "c") {
                    v = Variant::StepC;
                } else if (s == "d") {
                    v = Variant::StepD;
                } else if (s == "e") {
                    v = Variant::StepE;
                } else {
                    err << "error: unknown proof step '" << s << "' (expected a, b, c, d or e)\n";
                    return exit_error;
                }
                reports.push_back(verify_builtin(v, cfg));
            }
            if (reports.empty()) {
                err << "error: no proof steps selected\n";
                return exit_error;
            }
            return finish(reports, steps_opts, out, err);
        }
        if (*gould) {
            auto cfg = make_config(gould_opts, 0, gould_order);
            return finish({verify_builtin(Variant::Gould, cfg)}, gould_opts, out, err);
        }
        if (*check) {
            auto range = parse_m_range(check_range);
            if (!range) {
                err << "error: --m expects A..B or a single value, got '" << check_range << "'\n";
                return exit_error;
            }
            std::ifstream f(check_file, std::ios::binary);
            if (!f) {
                err << "error: cannot read " << check_file << "\n";
                return exit_error;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            auto cfg = make_config(check_opts, range->lo, range->hi);
            return finish({verify_file(buf.str(), cfg, check_file)}, check_opts, out, err);
        }
        if (*expand) {
            MultiPoly p;
            try {
                p = dsl::expand_expression(dsl::parse_expression(expand_expr));
            } catch (const dsl::DslError &e) {
                err << "error: " << e.what() << "\n";
                return exit_error;
            }
            if (expand_json) {
                nlohmann::ordered_json j;
                j["expression"] = expand_expr;
                j["polynomial"] = to_string(p);
                j["terms"] = p.term_count();
                out << j.dump(2) << "\n";
            } else {
                out << to_string(p) << "\n";
            }
            return exit_pass;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace binid::cli

#endif

// Command-line front end: resultants over polynomial files, the two theorem
// pipelines, the connection-coefficient vanishing checks, the seeded
// property suite, and small polynomial utilities.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 parameter or
// precondition error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "rforge/codazzi.hpp"
#include "rforge/hypersurface.hpp"
#include "rforge/selfcheck.hpp"

#include <CLI11.hpp>

namespace {

using namespace rforge;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitParameterError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Rational parse_fraction_arg(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const UsageError&) {
        throw CLI::ValidationError(what, "expected an integer or p/q fraction, got '" + text +
                                             "'");
    }
}

void emit_poly(const Poly& p, bool json, std::size_t max_terms) {
    if (!json) {
        std::cout << format(p) << "\n";
        return;
    }
    nlohmann::json j;
    j["term_count"] = p.term_count();
    j["degree_map"] = degree_map(p);
    if (p.term_count() <= max_terms) {
        j["text"] = format(p);
        j["poly"] = poly_to_json(p);
    } else {
        j["hash"] = rforge::detail::fnv1a_hex(format(p));
    }
    std::cout << j.dump(2) << "\n";
}

void emit_pipeline(const PipelineReport& rep, bool json, std::size_t max_terms) {
    if (json) {
        std::cout << rep.to_json(max_terms).dump(2) << "\n";
        return;
    }
    std::cout << rep.case_name << " pipeline\n";
    for (const Stage& s : rep.stages) {
        std::cout << "  " << s.name << ": " << (s.nonzero ? "nonzero" : "ZERO") << ", degrees";
        for (const auto& [var, deg] : s.degree_map) std::cout << " " << var << ":" << deg;
        std::cout << " (" << s.millis << " ms)\n";
    }
    for (const auto& [name, value] : rep.proportionality_constants)
        std::cout << "  " << name << " = " << to_string(value) << "\n";
    for (const std::string& d : rep.printed_vs_derived_diffs) std::cout << "  note: " << d << "\n";
    if (rep.final_poly && rep.final_poly->term_count() <= max_terms)
        std::cout << "  final: " << format(*rep.final_poly) << "\n";
    std::cout << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

void emit_report(const nlohmann::json& j, bool json) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << "verdict: " << j.at("verdict").get<std::string>() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Sylvester-resultant elimination toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands see the global options below

    bool json = false;
    std::string det_algorithm = "auto";
    std::uint64_t seed = 42;
    std::size_t max_terms = 50000;
    app.add_flag("--json", json, "emit JSON reports");
    app.add_option("--det", det_algorithm, "determinant algorithm")
        ->check(CLI::IsMember({"auto", "minor", "bareiss", "interp"}));
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--max-terms", max_terms, "polynomial size cap for JSON output");

    auto* cmd_res = app.add_subcommand("resultant", "resultant of two polynomial files");
    std::string file_f, file_g, res_var;
    cmd_res->add_option("f", file_f, "first polynomial file")->required();
    cmd_res->add_option("g", file_g, "second polynomial file")->required();
    cmd_res->add_option("var", res_var, "variable to eliminate")->required();

    auto* cmd_t1 = app.add_subcommand("theorem1", "five-curvature pipeline");
    int t1_n = 0, t1_r = 0;
    std::string t1_mu = "1";
    bool t1_symbolic = false, t1_case4 = false;
    cmd_t1->add_option("--n", t1_n, "dimension")->required();
    cmd_t1->add_option("--r", t1_r, "multiplicity split")->default_val(0);
    cmd_t1->add_option("--mu", t1_mu, "imaginary part (p/q)");
    cmd_t1->add_flag("--symbolic-mu", t1_symbolic, "keep mu symbolic");
    cmd_t1->add_flag("--case4", t1_case4, "run the four-curvature minimality check instead");

    auto* cmd_t2 = app.add_subcommand("theorem2", "six-curvature pipeline");
    int t2_n = 0, t2_r = 0, t2_s = 0;
    std::string t2_mu = "1", t2_k1 = "0";
    cmd_t2->add_option("--n", t2_n, "dimension")->required();
    cmd_t2->add_option("--r", t2_r, "first multiplicity")->required();
    cmd_t2->add_option("--s", t2_s, "second multiplicity")->required();
    cmd_t2->add_option("--mu", t2_mu, "imaginary part (p/q)");
    cmd_t2->add_option("--k1", t2_k1, "squared norm of the second fundamental form (p/q)");

    auto* cmd_cz = app.add_subcommand("codazzi", "connection-coefficient vanishing check");
    int cz_n = 0;
    std::vector<std::string> cz_lambdas, cz_rows;
    std::string cz_mu = "1", cz_H = "1", cz_lambda = "0", cz_sign = "uniform";
    bool cz_no_post = false, cz_degenerate = false;
    cmd_cz->add_option("--n", cz_n, "frame dimension")->required();
    cmd_cz->add_option("--lambdas", cz_lambdas, "curvatures for indices 3..n-1 (p/q)")
        ->required();
    cmd_cz->add_option("--mu", cz_mu, "imaginary part (p/q)");
    cmd_cz->add_option("--H", cz_H, "mean curvature (p/q)");
    cmd_cz->add_option("--lambda", cz_lambda, "block curvature (p/q)");
    cmd_cz->add_option("--rows", cz_rows, "row tags (default: all admissible)");
    cmd_cz->add_option("--sign", cz_sign, "compatibility sign convention")
        ->check(CLI::IsMember({"uniform", "lorentz"}));
    cmd_cz->add_flag("--no-post-lemma", cz_no_post, "drop the post-lemma simplifications");
    cmd_cz->add_flag("--degenerate-check", cz_degenerate,
                     "run the curvature-squared case analysis instead");

    auto* cmd_sc = app.add_subcommand("selfcheck", "seeded property suite");
    unsigned sc_scale = 1;
    cmd_sc->add_option("--scale", sc_scale, "trial count multiplier")->check(CLI::Range(1, 100));

    auto* cmd_poly = app.add_subcommand("poly", "polynomial utilities");
    cmd_poly->require_subcommand(1);
    auto* cmd_eval = cmd_poly->add_subcommand("eval", "evaluate at a rational point");
    std::string ev_file;
    std::vector<std::string> ev_at;
    cmd_eval->add_option("file", ev_file, "polynomial file")->required();
    cmd_eval->add_option("--at", ev_at, "assignments var=p/q")->required();
    auto* cmd_add = cmd_poly->add_subcommand("add", "sum of two polynomial files");
    auto* cmd_mul = cmd_poly->add_subcommand("mul", "product of two polynomial files");
    std::string bin_f, bin_g;
    for (auto* c : {cmd_add, cmd_mul}) {
        c->add_option("f", bin_f, "first polynomial file")->required();
        c->add_option("g", bin_g, "second polynomial file")->required();
    }
    auto* cmd_diff = cmd_poly->add_subcommand("diff", "partial derivative");
    std::string diff_file, diff_var;
    cmd_diff->add_option("file", diff_file, "polynomial file")->required();
    cmd_diff->add_option("var", diff_var, "variable")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParameterError;
    }

    auto load_pair = [&](const std::string& pf, const std::string& pg) {
        Poly f = parse_poly_source(read_file(pf));
        Poly g = parse_poly_source(read_file(pg));
        if (!same_table(f.vars(), g.vars()))
            throw InputError("files '" + pf + "' and '" + pg +
                             "' declare different variable tables");
        // Re-parse g over f's table so the operands share one table object.
        return std::make_pair(f, parse_polynomial(format(g), f.vars()));
    };

    if (cmd_res->parsed()) {
        auto [f, g] = load_pair(file_f, file_g);
        if (!f.vars()->has(res_var))
            throw InputError("variable '" + res_var + "' is not declared in the inputs");
        emit_poly(resultant(f, g, res_var, det_algorithm), json, max_terms);
        return kExitPass;
    }
    if (cmd_t1->parsed()) {
        Rational mu = parse_fraction_arg(t1_mu, "--mu");
        if (t1_case4) {
            nlohmann::json j = case4_check(t1_n, mu);
            emit_report(j, json);
            return j["verdict"] == "PASS" ? kExitPass : kExitVerificationFail;
        }
        PipelineReport rep = theorem1_pipeline(CaseVParams(t1_n, t1_r, mu), det_algorithm,
                                               t1_symbolic);
        emit_pipeline(rep, json, max_terms);
        return rep.pass ? kExitPass : kExitVerificationFail;
    }
    if (cmd_t2->parsed()) {
        CaseVIParams params(t2_n, t2_r, t2_s, parse_fraction_arg(t2_mu, "--mu"),
                            parse_fraction_arg(t2_k1, "--k1"));
        PipelineReport rep = theorem2_pipeline(params, det_algorithm);
        emit_pipeline(rep, json, max_terms);
        return rep.pass ? kExitPass : kExitVerificationFail;
    }
    if (cmd_cz->parsed()) {
        std::vector<Rational> lambdas;
        for (const std::string& l : cz_lambdas)
            lambdas.push_back(parse_fraction_arg(l, "--lambdas"));
        FrameConfig config(cz_n, std::move(lambdas), parse_fraction_arg(cz_mu, "--mu"),
                           parse_fraction_arg(cz_H, "--H"), !cz_no_post,
                           cz_sign == "lorentz" ? SignConvention::Lorentz
                                                : SignConvention::Uniform,
                           parse_fraction_arg(cz_lambda, "--lambda"));
        nlohmann::json j;
        if (cz_degenerate) {
            j = degenerate_mu_check(config);
        } else if (cz_rows.empty()) {
            j = vanishing_report(config);
        } else {
            j = vanishing_report(config,
                                 std::set<std::string>(cz_rows.begin(), cz_rows.end()));
        }
        emit_report(j, json);
        return j["verdict"] == "PASS" ? kExitPass : kExitVerificationFail;
    }
    if (cmd_sc->parsed()) {
        nlohmann::json j = selfcheck(seed, sc_scale);
        if (json)
            std::cout << j.dump(2) << "\n";
        else
            for (const auto& s : j["suites"])
                std::cout << s["name"].get<std::string>() << ": " << s["passed"] << "/"
                          << s["trials"] << "\n";
        if (!json) std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
        return j["verdict"] == "PASS" ? kExitPass : kExitVerificationFail;
    }
    if (cmd_eval->parsed()) {
        Poly p = parse_poly_source(read_file(ev_file));
        std::map<std::string, Rational> sigma;
        for (const std::string& item : ev_at) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw InputError("expected var=value in --at, got '" + item + "'");
            sigma[item.substr(0, eq)] = parse_fraction_arg(item.substr(eq + 1), "--at");
        }
        std::cout << to_string(evaluate(p, sigma)) << "\n";
        return kExitPass;
    }
    if (cmd_add->parsed() || cmd_mul->parsed()) {
        auto [f, g] = load_pair(bin_f, bin_g);
        emit_poly(cmd_add->parsed() ? f + g : f * g, json, max_terms);
        return kExitPass;
    }
    if (cmd_diff->parsed()) {
        Poly p = parse_poly_source(read_file(diff_file));
        if (!p.vars()->has(diff_var))
            throw InputError("variable '" + diff_var + "' is not declared in the input");
        emit_poly(partial_derivative(p, diff_var), json, max_terms);
        return kExitPass;
    }
    return kExitParameterError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rforge::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const rforge::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameterError;
    } catch (const rforge::PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFail;
    } catch (const rforge::DivisionNotExact& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFail;
    } catch (const rforge::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameterError;
    }
}

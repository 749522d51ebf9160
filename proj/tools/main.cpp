// opgraph: exact computational-algebra CLI for the operator graphs L_theta,
// the algebras M_theta and A_theta, induced modules, Ext tables, the
// 2-dimensional moduli catalog, and dephasing-channel identities.
//
// All output is JSON on stdout with sorted keys and canonical array orders;
// errors go to stderr. Exit codes: 0 pass, 1 check failure or internal
// invariant violation, 2 usage or parse error.

#include "opgraph/io.hpp"
#include "opgraph/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace opgraph;

constexpr const char* kVersion = "opgraph 1.0.0";

struct GlobalOptions {
    std::string output_path;
    bool porcelain = false;
};

void emit(const GlobalOptions& opts, const Json& j) {
    std::string text = j.dump();
    if (opts.output_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(opts.output_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + opts.output_path);
        out << text << "\n";
    }
}

Json suite_to_json(const VerificationSuite& s) {
    Json thetas = Json::array();
    for (const auto& t : s.theta_samples) thetas.push_back(t.to_string());
    Json checks = Json::array();
    for (const auto& c : s.checks)
        checks.push_back(Json{{"criterion", c.criterion},
                              {"name", c.name},
                              {"pass", c.pass},
                              {"witness", c.witness}});
    return Json{{"name", s.name},
                {"theta_samples", std::move(thetas)},
                {"checks", std::move(checks)},
                {"pass", s.all_pass()}};
}

int cmd_structure(const GlobalOptions& opts, const std::string& theta_text) {
    GaussRational theta = parse_scalar(theta_text);
    ThetaGenerators gen = theta_generators(theta);  // rejects theta = 0
    SpannedAlgebra m = close_algebra({gen.x, gen.y, gen.z}, true);
    SpannedAlgebra a = atheta_regular_representation(theta);
    std::size_t phi_rank = rank(atheta_phi_matrix(theta));
    Json out{{"theta", theta.to_string()},
             {"b", atheta_b(theta).to_string()},
             {"M", structure_report_to_json(structure_report(m))},
             {"A", structure_report_to_json(structure_report(a))},
             {"phi_rank", phi_rank}};
    emit(opts, out);
    return 0;
}

int cmd_verify(const GlobalOptions& opts, const std::string& suite_name) {
    VerificationSuite s = run_suite(suite_name);
    emit(opts, suite_to_json(s));
    return s.all_pass() ? 0 : 1;
}

int cmd_ext(const GlobalOptions& opts, const std::string& base, const std::string& chi_text,
            const std::string& psi_text) {
    ExtBase eb;
    if (base == "cp")
        eb = ExtBase::CP;
    else if (base == "cg")
        eb = ExtBase::CG;
    else
        throw std::invalid_argument("ext: base must be cp or cg");
    ExtProblem problem{eb, PCharacter::parse(chi_text), PCharacter::parse(psi_text)};
    emit(opts, ext_result_to_json(solve_ext(problem)));
    return 0;
}

int cmd_moduli_catalog(const GlobalOptions& opts) {
    Json out = Json::array();
    for (const auto& t : enumerate_isolated_points()) out.push_back(trace_tuple_to_json(t));
    emit(opts, out);
    return 0;
}

int cmd_moduli_family(const GlobalOptions& opts, const std::string& sign_text,
                      const std::string& s_text) {
    int sign;
    if (sign_text == "+" || sign_text == "+1")
        sign = 1;
    else if (sign_text == "-" || sign_text == "-1")
        sign = -1;
    else
        throw std::invalid_argument("family: sign must be + or -");
    GaussRational s = parse_scalar(s_text);
    Rep2Point p = family_point(sign, s);
    auto [tg, tg2, tz] = restrict_to_p(p);
    ComponentReport comp = moduli_component(p);
    bool curve = tg * tg - tg2 == GaussRational(2);
    Json out{{"sign", sign > 0 ? "+" : "-"},
             {"s", s.to_string()},
             {"point", Json{{"x", matrix_to_json(p.x_img())},
                            {"y", matrix_to_json(p.y_img())},
                            {"z", matrix_to_json(p.z_img())}}},
             {"trace_tuple", trace_tuple_to_json(trace_tuple(p))},
             {"restriction", Json{{"tr_g", tg.to_string()},
                                  {"tr_g2", tg2.to_string()},
                                  {"tr_z", tz.to_string()}}},
             {"component", to_string(comp.component)},
             {"curve_check", curve}};
    emit(opts, out);
    return curve ? 0 : 1;
}

int cmd_channel_dephasing(const GlobalOptions& opts, const std::string& alpha_text,
                          const std::string& beta_text, const std::string& rho_path) {
    Rational alpha = parse_rational(alpha_text);
    Rational beta = parse_rational(beta_text);
    KrausChannel ch = dephasing_channel(alpha, beta);
    if (rho_path.empty()) {
        emit(opts, kraus_summary_to_json(ch));
        return 0;
    }
    std::ifstream in(rho_path);
    if (!in) throw std::invalid_argument("cannot open state file: " + rho_path);
    Json jrho = Json::parse(in, nullptr, true);
    ExactMatrix rho = matrix_from_json(jrho);
    emit(opts, matrix_to_json(apply_channel(ch, rho)));
    return 0;
}

int cmd_channel_graph(const GlobalOptions& opts, const std::string& alpha_text,
                      const std::string& beta_text) {
    Rational alpha = parse_rational(alpha_text);
    Rational beta = parse_rational(beta_text);
    Subspace graph = noncommutative_graph(dephasing_channel(alpha, beta));
    emit(opts, subspace_to_json(graph));
    return 0;
}

int cmd_decompose(const GlobalOptions& opts, const std::string& theta_text) {
    GaussRational theta = parse_scalar(theta_text);
    PhiDecomposition dec = decompose_phi(theta);
    emit(opts, phi_decomposition_to_json(dec));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the operator graphs L_theta and the algebras "
                 "M_theta and A_theta"};
    app.require_subcommand(1);

    GlobalOptions opts;
    bool show_version = false;
    app.add_flag("--version", show_version, "print the version banner");
    app.add_flag("--porcelain", opts.porcelain, "suppress the version banner");
    app.add_option("--output", opts.output_path, "write JSON to this path instead of stdout");

    auto* structure = app.add_subcommand("structure", "structure reports for M_theta and A_theta");
    std::string theta_text;
    structure->add_option("--theta", theta_text, "parameter theta (scalar text format)")
        ->required();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    verify->add_option("suite", suite_name, "relations|dims|decompose|ext|moduli|channel|all")
        ->required();

    auto* ext = app.add_subcommand("ext", "Ext groups for characters / induced modules");
    std::string base, chi_text, psi_text;
    ext->add_option("--base", base, "cp or cg")->required();
    ext->add_option("--chi", chi_text, "source character, e.g. \"2,+1\"")->required();
    ext->add_option("--psi", psi_text, "target character, e.g. \"2,+1\"")->required();

    auto* moduli = app.add_subcommand("moduli", "2-dimensional moduli catalog and families");
    auto* catalog = moduli->add_subcommand("catalog", "the isolated trace-tuple catalog");
    auto* family = moduli->add_subcommand("family", "a point of the one-parameter families");
    std::string sign_text, s_text;
    family->add_option("--sign", sign_text, "+ or -")->required();
    family->add_option("--s", s_text, "the Tr(xy) parameter (scalar text format)")->required();
    moduli->require_subcommand(1);

    auto* channel = app.add_subcommand("channel", "dephasing channel utilities");
    auto* dephasing = channel->add_subcommand("dephasing", "apply the dephasing channel");
    std::string alpha_text, beta_text, rho_path;
    dephasing->add_option("--alpha", alpha_text, "rational alpha")->required();
    dephasing->add_option("--beta", beta_text, "rational beta")->required();
    dephasing->add_option("--rho", rho_path, "input state (matrix JSON file)");
    auto* graph = channel->add_subcommand("graph", "noncommutative graph of the channel");
    std::string galpha_text, gbeta_text;
    graph->add_option("--alpha", galpha_text, "rational alpha")->required();
    graph->add_option("--beta", gbeta_text, "rational beta")->required();
    channel->require_subcommand(1);

    auto* decompose = app.add_subcommand("decompose", "exact block decomposition of phi");
    std::string dec_theta_text;
    decompose->add_option("--theta", dec_theta_text, "parameter theta, not 0 or +-1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (show_version && !opts.porcelain) std::cerr << kVersion << "\n";

    try {
        if (*structure) return cmd_structure(opts, theta_text);
        if (*verify) return cmd_verify(opts, suite_name);
        if (*ext) return cmd_ext(opts, base, chi_text, psi_text);
        if (*catalog) return cmd_moduli_catalog(opts);
        if (*family) return cmd_moduli_family(opts, sign_text, s_text);
        if (*dephasing) return cmd_channel_dephasing(opts, alpha_text, beta_text, rho_path);
        if (*graph) return cmd_channel_graph(opts, galpha_text, gbeta_text);
        if (*decompose) return cmd_decompose(opts, dec_theta_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

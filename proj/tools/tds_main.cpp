#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tds/decompose.hpp"
#include "tds/pell.hpp"
#include "tds/selftest.hpp"
#include "tds/text.hpp"
#include "tds/verify.hpp"

using namespace tds;
using text::json;

namespace {

struct OutputOptions {
    bool as_json = false;
    bool as_latex = false;
    bool verify = false;
    unsigned long terms = 100000;
    long prec = 192;
    std::string tol = "1e-3";
};

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_flag("--json", opt.as_json, "emit JSON");
    cmd->add_flag("--latex", opt.as_latex, "emit LaTeX");
    cmd->add_flag("--verify", opt.verify, "cross-check against partial summation");
    cmd->add_option("--terms", opt.terms, "summation terms for --verify")->capture_default_str();
    cmd->add_option("--prec", opt.prec, "working precision in bits")->capture_default_str();
    cmd->add_option("--tol", opt.tol, "relative tolerance for --verify")->capture_default_str();
}

void emit_evaluation(const evaluator::Evaluation& ev, const std::string& trig_text,
                     const OutputOptions& opt) {
    if (opt.as_latex) {
        std::cout << text::latex_value(ev.coeff, ev.pi_power) << "\n";
        return;
    }
    if (opt.as_json) {
        json j = text::evaluation_json(ev, trig_text);
        if (opt.verify)
            j["verification"] = text::report_json(
                numerics::verify(ev, opt.terms, opt.prec, opt.tol, true));
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << text::render_text(ev, trig_text);
    if (opt.verify) {
        auto rep = numerics::verify(ev, opt.terms, opt.prec, opt.tol, true);
        std::cout << "  numeric (" << rep.terms_used << " terms): " << rep.numeric_value
                  << "\n  rel_error = " << rep.rel_error << "  ["
                  << (rep.pass ? "agrees" : "DISAGREES") << " at tol " << rep.tolerance << "]\n";
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact evaluation of trigonometric Dirichlet series at real quadratic "
                 "irrationalities"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate sum trig(pi n tau)/n^s exactly");
    std::string trig_text, tau_text;
    long s = 0;
    OutputOptions eval_opt;
    eval_cmd->add_option("trig", trig_text, "product of sin/cos/tan/cot/sec/csc factors")
        ->required();
    eval_cmd->add_option("--tau", tau_text, "real quadratic irrationality")->required();
    eval_cmd->add_option("-s,--weight", s, "exponent s")->required();
    add_output_flags(eval_cmd, eval_opt);

    // special
    auto* special_cmd = app.add_subcommand("special", "twisted series (alt-csc, odd-tan, chi-sec)");
    std::string variant_text, sp_tau;
    long sp_s = 0;
    OutputOptions sp_opt;
    special_cmd->add_option("variant", variant_text, "alt-csc | odd-tan | chi-sec")->required();
    special_cmd->add_option("--tau", sp_tau, "real quadratic irrationality")->required();
    special_cmd->add_option("-s,--weight", sp_s, "exponent s")->required();
    add_output_flags(special_cmd, sp_opt);

    // pell
    auto* pell_cmd = app.add_subcommand("pell", "fundamental solution of X^2 - k Y^2 = 1");
    std::string k_text;
    bool pell_json = false;
    pell_cmd->add_option("k", k_text, "positive nonsquare integer")->required();
    pell_cmd->add_flag("--json", pell_json, "emit JSON");

    // fix
    auto* fix_cmd = app.add_subcommand("fix", "matrix fixing tau, congruent to I mod N");
    std::string fix_tau;
    long fix_level = 1;
    bool fix_json = false;
    fix_cmd->add_option("--tau", fix_tau, "real quadratic irrationality")->required();
    fix_cmd->add_option("--level", fix_level, "congruence level N")->capture_default_str();
    fix_cmd->add_flag("--json", fix_json, "emit JSON");

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "factor a matrix into group generators");
    std::string dec_matrix, dec_group = "full";
    bool dec_json = false;
    dec_cmd->add_option("--matrix", dec_matrix, "a,b,c,d")->required();
    dec_cmd->add_option("--group", dec_group, "full | gamma2")->capture_default_str();
    dec_cmd->add_flag("--json", dec_json, "emit JSON");

    // cocycle
    auto* coc_cmd = app.add_subcommand("cocycle", "period function p_s(gamma; tau)");
    std::string coc_kind = "sec", coc_matrix;
    long coc_s = 0;
    bool coc_json = false;
    coc_cmd->add_option("--kind", coc_kind, "sec | cot")->capture_default_str();
    coc_cmd->add_option("-s,--weight", coc_s, "exponent s")->required();
    coc_cmd->add_option("--matrix", coc_matrix, "a,b,c,d")->required();
    coc_cmd->add_flag("--json", coc_json, "emit JSON");

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the embedded verification table");
    std::string filter;
    self_cmd->add_option("--filter", filter, "run only rows whose name contains this text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // 0 is --help/--version; anything else is a command-line parse error.
        return code == 0 ? 0 : 2;
    }

    if (eval_cmd->parsed()) {
        auto spec = evaluator::parse_trig(trig_text);
        auto rho = text::parse_tau(tau_text);
        emit_evaluation(evaluator::evaluate(spec.a, spec.b, s, rho), trig_text, eval_opt);
        return 0;
    }
    if (special_cmd->parsed()) {
        auto variant = evaluator::twisted_from_name(variant_text);
        auto rho = text::parse_tau(sp_tau);
        emit_evaluation(evaluator::eval_twisted(variant, sp_s, rho), "", sp_opt);
        return 0;
    }
    if (pell_cmd->parsed()) {
        arith::Integer k;
        try {
            k = arith::Integer(k_text);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer '" + k_text + "'", 0);
        }
        auto sol = modular::pell_fundamental(k);
        if (pell_json) {
            json j;
            j["X"] = arith::to_string(sol.X);
            j["Y"] = arith::to_string(sol.Y);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "X = " << sol.X << ", Y = " << sol.Y << "\n";
        }
        return 0;
    }
    if (fix_cmd->parsed()) {
        auto rho = text::parse_tau(fix_tau);
        auto gamma = modular::fixing_matrix(rho, fix_level);
        if (fix_json) {
            json j;
            j["matrix"] = gamma.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << gamma.str() << "\n";
        }
        return 0;
    }
    if (dec_cmd->parsed()) {
        auto m = modular::UnimodularMatrix::parse(dec_matrix);
        modular::GeneratorWord w;
        if (dec_group == "gamma2") w = modular::decompose_gamma2(m);
        else if (dec_group == "full") w = modular::decompose_full(m);
        else throw ParseError("unknown group '" + dec_group + "'", 0);
        if (dec_json) std::cout << text::word_json(w).dump(2) << "\n";
        else std::cout << w.str() << "\n";
        return 0;
    }
    if (coc_cmd->parsed()) {
        cocycle::SeriesKind kind;
        if (coc_kind == "sec") kind = cocycle::SeriesKind::Secant;
        else if (coc_kind == "cot") kind = cocycle::SeriesKind::Cotangent;
        else throw ParseError("unknown kind '" + coc_kind + "'", 0);
        auto m = modular::UnimodularMatrix::parse(coc_matrix);
        auto word = kind == cocycle::SeriesKind::Secant ? modular::decompose_gamma2(m)
                                                        : modular::decompose_full(m);
        auto p = cocycle::compose_cocycle(word, kind, coc_s);
        if (coc_json) {
            json j;
            j["weight"] = p.weight;
            j["num"] = p.body.num().str();
            j["den"] = p.body.den().str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "p_" << coc_s << "(gamma; tau) = " << p.body.str()
                      << "   (weight " << p.weight << ", coefficient of pi^" << coc_s << ")\n";
        }
        return 0;
    }
    if (self_cmd->parsed()) return selftest::run(std::cout, filter);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

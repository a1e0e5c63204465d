// obcalc: mapping-class arithmetic on the Klein bottle with one hole,
// fundamental groups of nonorientable open books, manifold-expression sums,
// and numeric verification of the explicit genus-two page of P2xS1.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "obcalc/klassen.hpp"
#include "obcalc/mcg.hpp"
#include "obcalc/murasugi.hpp"
#include "obcalc/openbook.hpp"
#include "obcalc/presentation.hpp"
#include "obcalc/verify.hpp"

namespace {

using namespace obcalc;

std::string mcg_json(MCGElement g) {
    return "{\"m\": " + std::to_string(g.m) + ", \"n\": " + std::to_string(g.n) + "}";
}

MonodromySpec spec_from_options(const std::string& file, const std::string& page,
                                const std::string& mcg_word) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return MonodromySpec::parse(buf.str());
    }
    if (page != "K")
        throw std::runtime_error("--page supports only K; use --spec for other pages");
    return MonodromySpec::from_catalog(parse_mcg(mcg_word), default_catalog());
}

std::string relators_json(const GroupPresentation& p) {
    std::ostringstream out;
    out << "{\"generators\": \"" << p.alphabet.gens() << "\", \"relators\": [";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        out << (i ? ", " : "") << '"' << p.relators[i].str() << '"';
    out << "]}";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open book calculator for nonorientable pages"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // mcg <op> <word>...
    auto* mcg = app.add_subcommand("mcg", "Map(K) arithmetic in the normal form t^m y^n");
    std::string mcg_op;
    std::vector<std::string> mcg_words;
    mcg->add_option("op", mcg_op, "mul | inv | normalize | conj | parity")->required();
    mcg->add_option("words", mcg_words, "words over t, T, y, Y")->required();

    auto add_spec_options = [](CLI::App* cmd, std::string& file, std::string& page,
                               std::string& word) {
        cmd->add_option("--spec", file, "monodromy spec file");
        cmd->add_option("--page", page, "page name (K)");
        cmd->add_option("--mcg", word, "monodromy word over t, T, y, Y");
    };

    auto* pi1 = app.add_subcommand("pi1", "fundamental group of the open book total space");
    std::string pi1_file, pi1_page = "K", pi1_word;
    bool pi1_torus = false;
    add_spec_options(pi1, pi1_file, pi1_page, pi1_word);
    pi1->add_flag("--mapping-torus", pi1_torus, "presentation of the mapping torus instead");

    auto* h1 = app.add_subcommand("h1", "first homology of the open book total space");
    std::string h1_file, h1_page = "K", h1_word;
    add_spec_options(h1, h1_file, h1_page, h1_word);

    auto* identify = app.add_subcommand("identify", "run the identification pipeline");
    std::string id_file, id_page = "K", id_word;
    add_spec_options(identify, id_file, id_page, id_word);

    auto* expr = app.add_subcommand("expr", "manifold expression calculus");
    std::string expr_op;
    std::vector<std::string> expr_args;
    expr->add_option("op", expr_op, "sum | normalize | h1")->required();
    expr->add_option("exprs", expr_args, "expressions like 'L(3) + S2x~S1'")->required();

    auto* klassen_cmd = app.add_subcommand("klassen", "sample a cross section of the page");
    double kl_t = 0.0;
    int kl_samples = 256;
    bool kl_csv = false;
    klassen_cmd->add_option("--t", kl_t, "level in [0, 1]")->required();
    klassen_cmd->add_option("--samples", kl_samples, "sampling resolution");
    klassen_cmd->add_flag("--csv", kl_csv, "CSV output (x, y, t, residual)");

    auto* derive = app.add_subcommand("derive-catalog", "search for the pi1 action catalog");
    int derive_bound = 8;
    derive->add_option("--max-len", derive_bound, "image length bound");

    auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
    std::string verify_only;
    verify->add_option("--only", verify_only, "restrict to one section, e.g. S7");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (mcg->parsed()) {
            if (mcg_op == "mul") {
                MCGElement g;
                for (const auto& w : mcg_words) g = mcg_mul(g, parse_mcg(w));
                std::cout << (json ? mcg_json(g) : g.str()) << '\n';
            } else if (mcg_op == "inv") {
                MCGElement g = mcg_inv(parse_mcg(mcg_words.at(0)));
                std::cout << (json ? mcg_json(g) : g.str()) << '\n';
            } else if (mcg_op == "normalize") {
                MCGElement g = parse_mcg(mcg_words.at(0));
                std::cout << (json ? mcg_json(g) : g.str()) << '\n';
            } else if (mcg_op == "conj") {
                if (mcg_words.size() == 1) {
                    MCGElement r = conjugacy_representative(parse_mcg(mcg_words[0]));
                    std::cout << (json ? mcg_json(r) : r.str()) << '\n';
                } else {
                    bool conj = is_conjugate(parse_mcg(mcg_words.at(0)),
                                             parse_mcg(mcg_words.at(1)));
                    std::cout << (json ? (conj ? "true" : "false")
                                       : (conj ? "conjugate" : "not conjugate"))
                              << '\n';
                }
            } else if (mcg_op == "parity") {
                int p = twist_parity(parse_mcg(mcg_words.at(0)));
                if (json) std::cout << p << '\n';
                else
                    std::cout << p << (p ? " (not a product of Dehn twists)"
                                         : " (product of Dehn twists)")
                              << '\n';
            } else {
                std::cerr << "unknown mcg op '" << mcg_op << "'\n";
                return 2;
            }
        } else if (pi1->parsed()) {
            MonodromySpec spec = spec_from_options(pi1_file, pi1_page, pi1_word);
            GroupPresentation p = pi1_torus ? mapping_torus_presentation(spec)
                                            : total_space_presentation(spec);
            std::cout << (json ? relators_json(p) + "\n" : p.format());
        } else if (h1->parsed()) {
            MonodromySpec spec = spec_from_options(h1_file, h1_page, h1_word);
            std::cout << h1_open_book(spec).json() << '\n';
        } else if (identify->parsed()) {
            MonodromySpec spec = spec_from_options(id_file, id_page, id_word);
            IdentifyResult res = identify_total_space(spec);
            std::string manifold = res.manifold ? res.manifold->str() : "unknown";
            if (json) {
                std::cout << "{\"recognition\": \"" << res.recognition.name()
                          << "\", \"manifold\": \"" << manifold
                          << "\", \"h1\": " << res.h1.json()
                          << ", \"downgraded\": " << (res.downgraded ? "true" : "false")
                          << "}\n";
            } else {
                std::cout << "recognition: " << res.recognition.name() << '\n'
                          << "H1: " << res.h1.str() << '\n'
                          << "manifold: " << manifold << '\n';
                if (res.downgraded)
                    std::cout << "(rewriting timed out; abelianization-only report)\n";
            }
        } else if (expr->parsed()) {
            if (expr_op == "sum") {
                ManifoldExpression e;
                for (const auto& s : expr_args) e = connected_sum(e, ManifoldExpression::parse(s));
                std::cout << e.str() << '\n';
            } else if (expr_op == "normalize") {
                std::cout << normalize_expression(ManifoldExpression::parse(expr_args.at(0))).str()
                          << '\n';
            } else if (expr_op == "h1") {
                std::cout << h1_expression(ManifoldExpression::parse(expr_args.at(0))).json()
                          << '\n';
            } else {
                std::cerr << "unknown expr op '" << expr_op << "'\n";
                return 2;
            }
        } else if (klassen_cmd->parsed()) {
            klassen::SliceReport rep = klassen::cross_section(kl_t, kl_samples);
            if (kl_csv) {
                std::cout << "x,y,t,residual\n";
                for (const auto& p : rep.points)
                    std::cout << p.x << ',' << p.y << ',' << p.t << ',' << p.residual << '\n';
            } else if (json) {
                std::cout << "{\"t\": " << rep.t
                          << ", \"component_count\": " << rep.component_count
                          << ", \"max_residual\": " << rep.max_residual << ", \"points\": [";
                for (std::size_t i = 0; i < rep.points.size(); ++i)
                    std::cout << (i ? ", " : "") << '[' << rep.points[i].x << ", "
                              << rep.points[i].y << ']';
                std::cout << "]}\n";
            } else {
                std::cout << "t = " << rep.t << ", " << rep.points.size() << " points, "
                          << rep.component_count
                          << " component(s), max residual = " << rep.max_residual << '\n';
            }
        } else if (derive->parsed()) {
            std::cout << derive_catalog(derive_bound).format();
        } else if (verify->parsed()) {
            VerificationReport rep = verify_paper(verify_only);
            std::cout << (json ? rep.json() : rep.table());
            return rep.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

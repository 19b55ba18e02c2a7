// qkinc — exact calculator for the (equivariant) quantum K-theory ring of
// the incidence variety Fl(1, n-1; n).
//
// Exit codes: 0 success, 1 verification suite failure, 2 usage or parse
// error, 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk/element_io.hpp"
#include "qk/errors.hpp"
#include "qk/gromov_witten.hpp"
#include "qk/projective.hpp"
#include "qk/qkring.hpp"
#include "qk/verify.hpp"

namespace {

struct Options {
    int n = 0;
    std::string cutoff_text = "3,3";
    std::string format = "text";
    bool equivariant = false;
    std::string out_path;
};

qk::Degree parse_degree(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("degree must be written d1,d2");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("degree must be written d1,d2");
    }
}

nlohmann::ordered_json laurent_json(const qk::Laurent& c) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, v] : c.terms()) {
        nlohmann::ordered_json mono;
        mono["exp"] = nlohmann::ordered_json::array();
        for (int r = 1; r <= c.vars(); ++r) mono["exp"].push_back(m.exponent(r));
        mono["c"] = v.to_decimal();
        arr.push_back(mono);
    }
    return arr;
}

void emit(const Options& opt, const std::string& text, const nlohmann::ordered_json& json) {
    std::string payload = opt.format == "json" ? json.dump() : text;
    std::cout << payload << "\n";
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
        file << payload << "\n";
    }
}

void emit_element(const Options& opt, qk::QkElement e) {
    if (!opt.equivariant) e = e.specialized();
    emit(opt, qk::print_element(e), nlohmann::ordered_json::parse(qk::element_json(e)));
}

void emit_coefficient(const Options& opt, qk::Laurent c) {
    if (!opt.equivariant) c = qk::Laurent::constant(c.vars(), c.eval_all_ones());
    nlohmann::ordered_json json;
    json["coeff"] = laurent_json(c);
    emit(opt, c.str(), json);
}

qk::WpIndex parse_wp(const std::string& text, int n) {
    const qk::TildeIndex w = qk::parse_index(text, n);
    auto [bar, d] = qk::normalize(w);
    if (!(d == qk::Degree{0, 0}))
        throw std::invalid_argument("expected an index with entries in 1..n: " + text);
    return bar;
}

// Bilinear extension of the closed non-equivariant product rule.
qk::QkElement lr_product(const qk::QkElement& a, const qk::QkElement& b) {
    qk::QkElement out(a.n());
    for (const auto& [k1, c1] : a.terms())
        for (const auto& [k2, c2] : b.terms())
            out += qk::lr_mult(qk::key_index(k1, a.n()), qk::key_index(k2, b.n()))
                       .scaled(c1 * c2);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum K-theory calculator for incidence varieties"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> args;
    int side = 1;
    std::string mode = "closed";
    std::string side_name = "schubert";
    std::string degree_text = "0,0";

    auto add_common = [&](CLI::App* cmd, std::size_t positional_count,
                          const std::string& positional_name) {
        cmd->add_option("--n", opt.n, "rank parameter (n >= 3)")->required();
        cmd->add_option("--cutoff", opt.cutoff_text, "series cutoff d1,d2")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_flag("--equivariant", opt.equivariant,
                      "keep torus coefficients (default specializes z -> 1)");
        cmd->add_option("--out", opt.out_path, "also write the result to a file");
        // allow_extra_args(false) keeps index literals like [2,1] from being
        // read as bracketed array values.
        if (positional_count > 0)
            cmd->add_option(positional_name, args, "arguments")
                ->expected(static_cast<int>(positional_count))
                ->allow_extra_args(false);
    };

    CLI::App* mult_cmd = app.add_subcommand("mult", "product of two elements");
    add_common(mult_cmd, 2, "elements");

    CLI::App* chev_cmd = app.add_subcommand("chev", "divisor product of an element");
    chev_cmd->add_option("--k", side, "divisor side (1 or 2)")->required()->check(CLI::Range(1, 2));
    add_common(chev_cmd, 1, "element");

    CLI::App* lr_cmd = app.add_subcommand("lr", "closed-rule non-equivariant product");
    add_common(lr_cmd, 2, "elements");

    CLI::App* classical_cmd =
        app.add_subcommand("classical", "ordinary K-theory divisor product");
    classical_cmd->add_option("--k", side, "divisor side (1 or 2)")
        ->required()
        ->check(CLI::Range(1, 2));
    add_common(classical_cmd, 1, "element");

    CLI::App* invariant_cmd =
        app.add_subcommand("invariant", "genus-zero 3-point invariant of degree d");
    invariant_cmd->add_option("--d", degree_text, "degree d1,d2")->required();
    add_common(invariant_cmd, 3, "indices");

    CLI::App* gwdiv_cmd = app.add_subcommand("gwdiv", "divisor Gromov-Witten invariant");
    gwdiv_cmd->add_option("--mode", mode, "closed or qclassical")
        ->check(CLI::IsMember({"closed", "qclassical"}))
        ->capture_default_str();
    gwdiv_cmd->add_option("--k", side, "divisor side (1 or 2)")->required()->check(CLI::Range(1, 2));
    gwdiv_cmd->add_option("--d", degree_text, "degree d1,d2 (qclassical mode)");
    add_common(gwdiv_cmd, 2, "arguments");

    CLI::App* nbhd_cmd = app.add_subcommand("nbhd", "curve neighborhood label");
    nbhd_cmd->add_option("--side", side_name, "schubert or opposite")
        ->check(CLI::IsMember({"schubert", "opposite"}))
        ->capture_default_str();
    nbhd_cmd->add_option("--d", degree_text, "degree d1,d2")->required();
    add_common(nbhd_cmd, 1, "index");

    CLI::App* iset_cmd = app.add_subcommand("iset", "Bruhat-interval set I(v)");
    add_common(iset_cmd, 1, "index");

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual-class expansion over Schubert classes");
    add_common(dual_cmd, 1, "index");

    CLI::App* psi_cmd = app.add_subcommand("psi", "series automorphism up to the cutoff");
    add_common(psi_cmd, 1, "element");

    CLI::App* project_cmd = app.add_subcommand("project", "projection to projective space");
    add_common(project_cmd, 1, "element");

    CLI::App* table_cmd = app.add_subcommand("table", "full multiplication table");
    add_common(table_cmd, 0, "");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd, 1, "suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const int n = opt.n;
        const qk::Degree cutoff = parse_degree(opt.cutoff_text);

        if (mult_cmd->parsed()) {
            emit_element(opt, qk::mult(qk::parse_element(args[0], n),
                                       qk::parse_element(args[1], n)));
        } else if (chev_cmd->parsed()) {
            emit_element(opt, qk::chevalley_mult(qk::parse_element(args[0], n), side));
        } else if (lr_cmd->parsed()) {
            emit_element(opt, lr_product(qk::parse_element(args[0], n).specialized(),
                                         qk::parse_element(args[1], n).specialized()));
        } else if (classical_cmd->parsed()) {
            emit_element(opt, qk::classical_divisor_mult(qk::parse_element(args[0], n), side));
        } else if (invariant_cmd->parsed()) {
            const long long value =
                qk::three_point(parse_wp(args[0], n), parse_wp(args[1], n), parse_wp(args[2], n),
                                parse_degree(degree_text));
            nlohmann::ordered_json json;
            json["value"] = value;
            emit(opt, std::to_string(value), json);
        } else if (gwdiv_cmd->parsed()) {
            if (mode == "closed") {
                emit_coefficient(opt, qk::gw_divisor_closed(parse_wp(args[0], n), side,
                                                            qk::parse_index(args[1], n)));
            } else {
                emit_coefficient(opt, qk::gw_divisor_qclassical(
                                          qk::parse_element(args[0], n), side,
                                          parse_wp(args[1], n), parse_degree(degree_text)));
            }
        } else if (nbhd_cmd->parsed()) {
            const qk::WpIndex u = parse_wp(args[0], n);
            const qk::Degree d = parse_degree(degree_text);
            const qk::WpIndex label =
                side_name == "schubert" ? qk::gamma_schubert(u, d) : qk::gamma_opposite(u, d);
            nlohmann::ordered_json json;
            json["index"] = {label.i(), label.j()};
            emit(opt, label.str(), json);
        } else if (iset_cmd->parsed()) {
            std::string text;
            nlohmann::ordered_json json;
            json["indices"] = nlohmann::ordered_json::array();
            for (const qk::WpIndex& u : qk::i_set(parse_wp(args[0], n))) {
                if (!text.empty()) text += " ";
                text += u.str();
                json["indices"].push_back({u.i(), u.j()});
            }
            emit(opt, text, json);
        } else if (dual_cmd->parsed()) {
            std::string text;
            nlohmann::ordered_json json;
            json["terms"] = nlohmann::ordered_json::array();
            for (const auto& [u, sign] : qk::dual_expand(parse_wp(args[0], n))) {
                if (text.empty())
                    text += sign < 0 ? "-" : "";
                else
                    text += sign < 0 ? " - " : " + ";
                text += "O_" + u.str();
                nlohmann::ordered_json term;
                term["index"] = {u.i(), u.j()};
                term["sign"] = sign;
                json["terms"].push_back(term);
            }
            emit(opt, text, json);
        } else if (psi_cmd->parsed()) {
            emit_element(opt, qk::psi(qk::parse_element(args[0], n), cutoff).element);
        } else if (project_cmd->parsed()) {
            qk::ProjElement p = qk::project(qk::parse_element(args[0], n));
            if (!opt.equivariant) {
                qk::ProjElement numeric(n);
                for (const auto& [k, c] : p.terms())
                    numeric.add(k, qk::Laurent::constant(n - 1, c.eval_all_ones()));
                p = numeric;
            }
            nlohmann::ordered_json json;
            json["terms"] = nlohmann::ordered_json::array();
            for (const auto& [k, c] : p.terms()) {
                nlohmann::ordered_json term;
                term["k"] = k;
                term["coeff"] = laurent_json(c);
                json["terms"].push_back(term);
            }
            emit(opt, p.str(), json);
        } else if (table_cmd->parsed()) {
            std::string text;
            nlohmann::ordered_json json;
            json["products"] = nlohmann::ordered_json::array();
            for (const qk::WpIndex& u : qk::enumerate_wp(n)) {
                for (const qk::WpIndex& v : qk::enumerate_wp(n)) {
                    qk::QkElement prod =
                        opt.equivariant
                            ? qk::mult(qk::QkElement::basis(u.tilde()),
                                       qk::QkElement::basis(v.tilde()))
                            : qk::lr_mult(u.tilde(), v.tilde());
                    text += "O" + u.str() + " * O" + v.str() + " = " + qk::print_element(prod) +
                            "\n";
                    nlohmann::ordered_json row;
                    row["u"] = {u.i(), u.j()};
                    row["v"] = {v.i(), v.j()};
                    row["product"] = nlohmann::ordered_json::parse(qk::element_json(prod));
                    json["products"].push_back(row);
                }
            }
            if (!text.empty()) text.pop_back();
            emit(opt, text, json);
        } else if (verify_cmd->parsed()) {
            const qk::VerificationReport report = qk::run_suite(args[0], n, cutoff);
            emit(opt, report.render_text(),
                 nlohmann::ordered_json::parse(report.render_json()));
            std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
            return report.passed() ? 0 : 1;
        }
        return 0;
    } catch (const qk::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qk::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

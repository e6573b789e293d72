#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "bei/closed_form.hpp"
#include "bei/family.hpp"
#include "bei/grobner.hpp"
#include "bei/hilbert.hpp"
#include "bei/hochster.hpp"
#include "bei/koszul.hpp"
#include "bei/verify.hpp"

using json = nlohmann::json;
using namespace bei;

namespace {

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    json out = {{"n", g.n}, {"edges", edges}};
    if (!g.provenance.empty()) out["provenance"] = g.provenance;
    return out;
}

json table_to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [ij, v] : t.entries)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
    return {{"subject", t.subject},
            {"ringVars", t.ringVars},
            {"entries", entries},
            {"note", t.note}};
}

json opt_json(const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
}
json opt_json(const std::optional<long long>& v) {
    return v ? json(*v) : json(nullptr);
}

json closed_to_json(const InvariantReport& r) {
    return {{"expression", r.expression},
            {"reg", opt_json(r.reg)},
            {"projdim", opt_json(r.projdim)},
            {"extremalBetti", opt_json(r.extremalBetti)},
            {"cmType", opt_json(r.cmType)},
            {"cmTypeConjectural", r.cmTypeConjectural},
            {"notes", r.notes}};
}

json oracle_to_json(const OracleResult& o) {
    json out = {{"method", o.method},
                {"reg", opt_json(o.reg)},
                {"projdim", opt_json(o.projdim)},
                {"cmType", opt_json(o.cmType)},
                {"extremalBetti", opt_json(o.extremalBetti)},
                {"cornerCertified", o.cornerCertified},
                {"seconds", o.seconds}};
    if (!o.note.empty()) out["note"] = o.note;
    return out;
}

json verification_to_json(const VerificationReport& rep) {
    return {{"expression", rep.expression},
            {"closedForm", closed_to_json(rep.closed)},
            {"oracle", oracle_to_json(rep.oracle)},
            {"verdicts",
             {{"reg", verdict_name(rep.regVerdict)},
              {"projdim", verdict_name(rep.projdimVerdict)},
              {"extremalBetti", verdict_name(rep.extremalVerdict)},
              {"cmType", verdict_name(rep.cmTypeVerdict)}}},
            {"seconds", rep.seconds}};
}

void print_verification_text(const VerificationReport& rep) {
    auto cell = [](const auto& opt) {
        return opt ? std::to_string(*opt) : std::string("-");
    };
    std::cout << rep.expression << "\n";
    std::cout << "  invariant        closed  oracle  verdict\n";
    std::cout << "  reg              " << cell(rep.closed.reg) << "\t" << cell(rep.oracle.reg)
              << "\t" << verdict_name(rep.regVerdict) << "\n";
    std::cout << "  projdim          " << cell(rep.closed.projdim) << "\t"
              << cell(rep.oracle.projdim) << "\t" << verdict_name(rep.projdimVerdict) << "\n";
    std::cout << "  extremalBetti    " << cell(rep.closed.extremalBetti) << "\t"
              << cell(rep.oracle.extremalBetti) << "\t"
              << verdict_name(rep.extremalVerdict) << "\n";
    std::cout << "  cmType           " << cell(rep.closed.cmType) << "\t"
              << cell(rep.oracle.cmType) << "\t" << verdict_name(rep.cmTypeVerdict)
              << (rep.closed.cmTypeConjectural ? " (closed value conjectural)" : "")
              << "\n";
    for (const auto& n : rep.closed.notes) std::cout << "  note: " << n << "\n";
    if (!rep.oracle.note.empty()) std::cout << "  oracle: " << rep.oracle.note << "\n";
    std::cout << "  oracle method: " << rep.oracle.method << " ("
              << rep.oracle.seconds << "s)\n";
}

int exit_code_for(const VerificationReport& rep) {
    if (rep.anyMismatch) return 2;
    if (rep.anyNotComputable) return 3;
    return 0;
}

/// substitute $M in a scan template
std::string substitute(const std::string& tmpl, int value) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] == 'M') {
            out += std::to_string(value);
            ++i;
        } else {
            out += tmpl[i];
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideal invariants: closed forms and exact oracles"};
    app.require_subcommand(1);

    std::string exprText, format = "table", method = "auto", subject = "J";
    std::string mode = "both";
    long long fieldChar = kDefaultChar;
    int threads = 0, maxDegree = 8;

    auto addCommon = [&](CLI::App* c, bool withExpr = true) {
        if (withExpr) c->add_option("expr", exprText, "family expression")->required();
        c->add_option("--char", fieldChar, "field characteristic (prime, or 0 for Q)");
        c->add_option("--threads", threads, "OpenMP threads (0 = default)");
        c->add_option("--format", format, "output format: table|json");
    };

    auto* cmdBuild = app.add_subcommand("build", "construct the graph of an expression");
    addCommon(cmdBuild);

    auto* cmdInv = app.add_subcommand("invariants", "closed-form and/or oracle invariants");
    addCommon(cmdInv);
    cmdInv->add_option("--mode", mode, "closed|oracle|both");
    cmdInv->add_option("--method", method, "oracle backend: auto|koszul|hochster");

    auto* cmdBetti = app.add_subcommand("betti", "full graded Betti table");
    addCommon(cmdBetti);
    cmdBetti->add_option("--subject", subject, "J (Koszul) or inJ (Hochster)");
    cmdBetti->add_option("--max-degree", maxDegree, "Koszul jMax override");

    auto* cmdHilbert = app.add_subcommand("hilbert", "Hilbert series and h-vector");
    addCommon(cmdHilbert);
    cmdHilbert->add_option("--max-degree", maxDegree, "Hilbert function window");

    auto* cmdVerify = app.add_subcommand("verify", "closed form vs oracle");
    addCommon(cmdVerify);
    cmdVerify->add_option("--method", method, "oracle backend: auto|koszul|hochster");

    std::string scanTemplate;
    int scanFrom = 2, scanTo = 3;
    bool conjecture = false;
    auto* cmdScan = app.add_subcommand("scan", "verify a template over a parameter range");
    cmdScan->add_option("--template", scanTemplate, "expression with $M placeholder")
        ->required();
    cmdScan->add_option("--from", scanFrom, "first $M value");
    cmdScan->add_option("--to", scanTo, "last $M value");
    cmdScan->add_flag("--conjecture", conjecture,
                      "also test CM-type == extremal Betti number");
    addCommon(cmdScan, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdBuild->parsed()) {
            auto e = parse_expr(exprText);
            Graph g = build_graph(*e);
            if (format == "json") {
                std::cout << graph_to_json(g).dump(2) << "\n";
            } else {
                std::cout << "graph " << print_expr(*e) << ": n=" << g.n
                          << " edges=" << g.edges.size() << "\n";
                for (const auto& [u, v] : g.edges)
                    std::cout << "  {" << u << "," << v << "}\n";
            }
            return 0;
        }

        OracleOptions oo;
        oo.fieldChar = fieldChar;
        oo.threads = threads;
        oo.method = method;

        if (cmdInv->parsed() || cmdVerify->parsed()) {
            auto e = parse_expr(exprText);
            if (cmdInv->parsed() && mode == "closed") {
                auto rep = closed_form_report(*e);
                if (format == "json")
                    std::cout << closed_to_json(rep).dump(2) << "\n";
                else {
                    auto cell = [](const auto& opt) {
                        return opt ? std::to_string(*opt) : std::string("-");
                    };
                    std::cout << rep.expression << ": reg=" << cell(rep.reg)
                              << " projdim=" << cell(rep.projdim)
                              << " extremalBetti=" << cell(rep.extremalBetti)
                              << " cmType=" << cell(rep.cmType)
                              << (rep.cmTypeConjectural ? " (conjectural)" : "")
                              << "\n";
                    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
                }
                return 0;
            }
            if (cmdInv->parsed() && mode == "oracle") {
                auto res = oracle_invariants(*e, oo);
                if (format == "json")
                    std::cout << oracle_to_json(res).dump(2) << "\n";
                else {
                    auto cell = [](const auto& opt) {
                        return opt ? std::to_string(*opt) : std::string("-");
                    };
                    std::cout << print_expr(*e) << " [" << res.method
                              << "]: reg=" << cell(res.reg)
                              << " projdim=" << cell(res.projdim)
                              << " extremalBetti=" << cell(res.extremalBetti)
                              << " cmType=" << cell(res.cmType) << "\n";
                    if (!res.note.empty()) std::cout << "  note: " << res.note << "\n";
                }
                return res.method == "none" ? 3 : 0;
            }
            auto rep = verify_expr(*e, oo);
            if (format == "json")
                std::cout << verification_to_json(rep).dump(2) << "\n";
            else
                print_verification_text(rep);
            return exit_code_for(rep);
        }

        if (cmdBetti->parsed()) {
            auto e = parse_expr(exprText);
            Graph g = build_graph(*e);
            auto gr = groebner_of_graph(g, fieldChar);
            BettiTable t;
            if (subject == "inJ") {
                HochsterOptions ho;
                ho.fieldChar = fieldChar;
                ho.threads = threads;
                t = hochster_betti(gr.inJ, ho);
            } else {
                KoszulOptions ko;
                ko.fieldChar = fieldChar;
                ko.threads = threads;
                if (cmdBetti->count("--max-degree")) ko.jMax = maxDegree;
                t = koszul_betti(gr, ko);
            }
            if (format == "json")
                std::cout << table_to_json(t).dump(2) << "\n";
            else
                std::cout << table_grid(t) << "\n";
            return 0;
        }

        if (cmdHilbert->parsed()) {
            auto e = parse_expr(exprText);
            Graph g = build_graph(*e);
            auto gr = groebner_of_graph(g, fieldChar);
            KoszulOptions ko;
            ko.fieldChar = fieldChar;
            ko.threads = threads;
            auto series = hilbert_series_from_betti(koszul_betti(gr, ko));
            auto hf = hilbert_function_from_series(series, maxDegree);
            if (format == "json") {
                std::cout << json{{"expression", print_expr(*e)},
                                  {"p", series.numerator},
                                  {"h", series.h},
                                  {"d", series.d},
                                  {"a", series.aInvariant},
                                  {"hilbertFunction", hf}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << print_expr(*e) << ": h = (";
                for (std::size_t i = 0; i < series.h.size(); ++i)
                    std::cout << (i ? ", " : "") << series.h[i];
                std::cout << "), d = " << series.d << ", a = " << series.aInvariant
                          << "\n  HF(0.." << maxDegree << ") =";
                for (long long v : hf) std::cout << " " << v;
                std::cout << "\n";
            }
            return 0;
        }

        if (cmdScan->parsed()) {
            int worst = 0;
            json rows = json::array();
            if (format != "json")
                std::cout << "M\texpression\tclosed(reg,bhat)\toracle(reg,bhat)\t"
                             "verdicts\tconjecture\n";
            for (int mval = scanFrom; mval <= scanTo; ++mval) {
                std::string text = substitute(scanTemplate, mval);
                auto e = parse_expr(text);
                auto rep = verify_expr(*e, oo);
                std::string conj = "untested";
                if (conjecture) {
                    auto c = check_corner_conjecture(*e, oo);
                    conj = c.tested ? (c.holds ? "holds" : "fails: " + c.detail)
                                    : c.detail;
                }
                worst = std::max(worst, exit_code_for(rep));
                if (format == "json") {
                    json row = verification_to_json(rep);
                    row["M"] = mval;
                    if (conjecture) row["conjecture"] = conj;
                    rows.push_back(row);
                } else {
                    auto cell = [](const auto& opt) {
                        return opt ? std::to_string(*opt) : std::string("-");
                    };
                    std::cout << mval << "\t" << rep.expression << "\t("
                              << cell(rep.closed.reg) << ","
                              << cell(rep.closed.extremalBetti) << ")\t("
                              << cell(rep.oracle.reg) << ","
                              << cell(rep.oracle.extremalBetti) << ")\t"
                              << verdict_name(rep.regVerdict) << "/"
                              << verdict_name(rep.extremalVerdict) << "\t" << conj
                              << "\n";
                }
            }
            if (format == "json") std::cout << rows.dump(2) << "\n";
            return worst;
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}

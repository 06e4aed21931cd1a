#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "realroots/errors.hpp"
#include "realroots/groebner.hpp"
#include "realroots/hurwitz.hpp"
#include "realroots/isolate.hpp"
#include "realroots/parse.hpp"
#include "realroots/quotient_ring.hpp"
#include "realroots/rur.hpp"
#include "realroots/sturm.hpp"
#include "realroots/zerodim.hpp"

namespace realroots::cli {

using nlohmann::json;

namespace detail {

inline ExtendedPoint parseEndpoint(const std::string& s) {
    if (s == "inf" || s == "+inf") return ExtendedPoint::posInfinity();
    if (s == "-inf") return ExtendedPoint::negInfinity();
    return ExtendedPoint(Rational::fromString(s));
}

inline MonomialOrder parseOrder(const std::string& s) {
    if (s == "lex") return MonomialOrder(OrderKind::Lex);
    if (s == "grlex") return MonomialOrder(OrderKind::GrLex);
    if (s == "grevlex") return MonomialOrder(OrderKind::GrevLex);
    throw UsageError("unknown monomial order '" + s + "'");
}

inline std::vector<std::string> splitVars(const std::string& csv) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) vars.push_back(cur);
    if (vars.empty()) throw UsageError("--vars must list at least one variable");
    return vars;
}

inline void mergeVariables(const PolyExpr& e, std::vector<std::string>& out) {
    for (const auto& v : collectVariables(e)) {
        bool found = false;
        for (const auto& w : out)
            if (w == v) found = true;
        if (!found) out.push_back(v);
    }
}

/// Parses several expressions sharing one univariate variable.
inline std::vector<UniPoly> parseUniFamily(const std::vector<std::string>& srcs) {
    std::vector<std::shared_ptr<PolyExpr>> trees;
    std::vector<std::string> seen;
    for (const auto& s : srcs) {
        trees.push_back(parsePoly(s));
        mergeVariables(*trees.back(), seen);
    }
    if (seen.size() > 1)
        throw UsageError("expected univariate input, found variables " + seen[0] + " and " +
                         seen[1]);
    std::string var = seen.empty() ? "x" : seen[0];
    std::vector<UniPoly> polys;
    polys.reserve(trees.size());
    for (const auto& t : trees) polys.push_back(expandUni(*t, var));
    return polys;
}

inline std::vector<MultiPoly> parseGenerators(const std::vector<std::string>& srcs,
                                              const std::vector<std::string>& vars,
                                              MonomialOrder order) {
    std::vector<MultiPoly> gens;
    gens.reserve(srcs.size());
    for (const auto& s : srcs) {
        auto tree = parsePoly(s, vars);
        gens.push_back(expandMulti(*tree, vars, order));
    }
    return gens;
}

inline QuotientRing makeRing(const std::vector<std::string>& gens, const std::string& varsCsv,
                             const std::string& orderName) {
    std::vector<std::string> vars = splitVars(varsCsv);
    MonomialOrder order = parseOrder(orderName);
    return QuotientRing::standardBasis(buchberger(parseGenerators(gens, vars, order), order));
}

inline json matrixJson(const SquareMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).toString());
        rows.push_back(row);
    }
    return rows;
}

inline void emitValue(std::ostream& out, bool asJson, long value) {
    if (asJson)
        out << json{{"value", value}}.dump() << "\n";
    else
        out << value << "\n";
}

inline void emitMatrix(std::ostream& out, bool asJson, const SquareMatrix& m) {
    if (asJson)
        out << json{{"matrix", matrixJson(m)}}.dump() << "\n";
    else
        out << m.toString() << "\n";
}

} // namespace detail

/// Runs one CLI job. Exit codes: 0 success, 2 usage error, 3 domain error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact real-root counting, isolation and location for polynomial systems"};
    app.require_subcommand(1);
    app.fallthrough();
    bool asJson = false;
    app.add_flag("--json", asJson, "emit JSON instead of text");

    // ---- univariate commands ----
    struct {
        std::vector<std::string> values;
        std::vector<std::string> polys;
        std::string a = "-inf", b = "inf";
        std::string tolerance = "1/64";
        bool multiplicity = false;
        bool leftClosed = false;
        bool reduced = false;
    } opt;

    CLI::App* variationsCmd =
        app.add_subcommand("variations", "sign variations of a rational sequence");
    variationsCmd->add_option("values", opt.values, "rational numbers")->required();

    auto addPoly = [&](CLI::App* cmd, std::size_t count) {
        cmd->add_option("poly", opt.polys, "polynomial expression")
            ->required()
            ->expected(static_cast<int>(count));
    };
    auto addInterval = [&](CLI::App* cmd) {
        cmd->add_option("--a", opt.a, "left endpoint (rational, 'inf' or '-inf')");
        cmd->add_option("--b", opt.b, "right endpoint (rational, 'inf' or '-inf')");
    };

    CLI::App* descartesCmd = app.add_subcommand("descartes", "Descartes bound on positive roots");
    addPoly(descartesCmd, 1);

    CLI::App* budanCmd =
        app.add_subcommand("budan-fourier", "Budan-Fourier bound on roots in (a,b]");
    addPoly(budanCmd, 1);
    addInterval(budanCmd);

    CLI::App* sylSeqCmd = app.add_subcommand("sylvester-seq", "Sylvester sequence of f and g");
    addPoly(sylSeqCmd, 2);
    sylSeqCmd->add_flag("--reduced", opt.reduced, "divide through by the last element");

    CLI::App* sylCountCmd =
        app.add_subcommand("sylvester-count", "signed root count weighted by the sign of g");
    addPoly(sylCountCmd, 2);
    addInterval(sylCountCmd);
    sylCountCmd->add_flag("--multiplicity", opt.multiplicity, "count with multiplicity");

    CLI::App* sturmCmd = app.add_subcommand("sturm-count", "number of real roots in (a,b]");
    addPoly(sturmCmd, 1);
    addInterval(sturmCmd);
    sturmCmd->add_flag("--multiplicity", opt.multiplicity, "count with multiplicity");
    sturmCmd->add_flag("--left-closed", opt.leftClosed, "count roots in [a,b) instead");

    CLI::App* multCmd =
        app.add_subcommand("multiplicity-count", "number of real roots counted with multiplicity");
    addPoly(multCmd, 1);
    addInterval(multCmd);

    CLI::App* isolateCmd = app.add_subcommand("isolate", "isolating intervals for the real roots");
    addPoly(isolateCmd, 1);
    isolateCmd->add_option("--tolerance", opt.tolerance, "maximum interval width (positive rational)");

    CLI::App* hurMatCmd = app.add_subcommand("hurwitz-matrix", "Hurwitz matrix of f");
    addPoly(hurMatCmd, 1);
    CLI::App* hurDetCmd =
        app.add_subcommand("hurwitz-determinants", "leading principal minors of the Hurwitz matrix");
    addPoly(hurDetCmd, 1);
    CLI::App* hurStableCmd = app.add_subcommand("hurwitz-stable", "Hurwitz stability test");
    addPoly(hurStableCmd, 1);

    // ---- multivariate commands ----
    struct {
        std::vector<std::string> gens;
        std::string f;
        std::string h;
        std::string vars;
        std::string order = "grevlex";
        std::string eliminantVar = "Z";
        std::string rurVar = "T";
    } sys;

    auto addVars = [&](CLI::App* cmd) {
        cmd->add_option("--vars", sys.vars, "ordered comma-separated variable list")->required();
        cmd->add_option("--order", sys.order, "monomial order: grevlex|lex|grlex");
    };

    CLI::App* groebnerCmd = app.add_subcommand("groebner", "reduced Groebner basis");
    groebnerCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(groebnerCmd);

    CLI::App* regRepCmd =
        app.add_subcommand("regular-rep", "matrix of multiplication by f on K[x]/I");
    regRepCmd->add_option("f", sys.f, "the multiplier polynomial")->required();
    regRepCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(regRepCmd);

    CLI::App* eliminantCmd =
        app.add_subcommand("eliminant", "minimal polynomial of multiplication by f");
    eliminantCmd->add_option("f", sys.f, "the eliminated polynomial")->required();
    eliminantCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(eliminantCmd);
    eliminantCmd->add_option("--eliminant-var", sys.eliminantVar, "variable of the output");

    CLI::App* rurCmd = app.add_subcommand("rur", "rational univariate representation");
    rurCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(rurCmd);
    rurCmd->add_option("--eliminant-var", sys.rurVar, "variable of the output");

    CLI::App* traceFormCmd = app.add_subcommand("trace-form", "matrix of the trace form S_h");
    traceFormCmd->add_option("weight", sys.h, "the weight polynomial")->required();
    traceFormCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(traceFormCmd);

    CLI::App* traceCountCmd =
        app.add_subcommand("trace-count", "number of complex points of V(I)");
    traceCountCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(traceCountCmd);

    CLI::App* realCountCmd = app.add_subcommand("real-count", "number of real points of V(I)");
    realCountCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(realCountCmd);

    CLI::App* traceSigCmd =
        app.add_subcommand("trace-signature", "signature of the trace form S_h");
    traceSigCmd->add_option("weight", sys.h, "the weight polynomial")->required();
    traceSigCmd->add_option("gens", sys.gens, "ideal generators")->required();
    addVars(traceSigCmd);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("realroots");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (variationsCmd->parsed()) {
            std::vector<Rational> seq;
            seq.reserve(opt.values.size());
            for (const auto& s : opt.values) seq.push_back(Rational::fromString(s));
            detail::emitValue(out, asJson, variations(seq));
            return 0;
        }
        if (descartesCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            detail::emitValue(out, asJson, descartesBound(f));
            return 0;
        }
        if (budanCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            detail::emitValue(out, asJson,
                              budanFourierBound(f, detail::parseEndpoint(opt.a),
                                                detail::parseEndpoint(opt.b)));
            return 0;
        }
        if (sylSeqCmd->parsed()) {
            auto fg = detail::parseUniFamily(opt.polys);
            PolySequence seq = opt.reduced ? reducedSylvesterSequence(fg[0], fg[1])
                                           : sylvesterSequence(fg[0], fg[1]);
            if (asJson) {
                json arr = json::array();
                for (const auto& p : seq) arr.push_back(p.toString());
                out << json{{"sequence", arr}}.dump() << "\n";
            } else {
                for (const auto& p : seq) out << p.toString() << "\n";
            }
            return 0;
        }
        if (sylCountCmd->parsed()) {
            auto fg = detail::parseUniFamily(opt.polys);
            detail::emitValue(out, asJson,
                              sylvesterCount(fg[0], fg[1], detail::parseEndpoint(opt.a),
                                             detail::parseEndpoint(opt.b), opt.multiplicity));
            return 0;
        }
        if (sturmCmd->parsed() || multCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            bool mult = multCmd->parsed() || opt.multiplicity;
            detail::emitValue(out, asJson,
                              sturmCount(f, detail::parseEndpoint(opt.a),
                                         detail::parseEndpoint(opt.b), mult, opt.leftClosed));
            return 0;
        }
        if (isolateCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            auto intervals = realRootIsolation(f, Rational::fromString(opt.tolerance));
            if (asJson) {
                json arr = json::array();
                for (const auto& iv : intervals)
                    arr.push_back({{"lo", iv.lo.toString()},
                                   {"hi", iv.hi.toString()},
                                   {"multiplicity", iv.multiplicity}});
                out << json{{"intervals", arr}}.dump() << "\n";
            } else {
                for (const auto& iv : intervals)
                    out << "(" << iv.lo.toString() << ", " << iv.hi.toString()
                        << "] multiplicity " << iv.multiplicity << "\n";
            }
            return 0;
        }
        if (hurMatCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            detail::emitMatrix(out, asJson, hurwitzMatrix(f));
            return 0;
        }
        if (hurDetCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            auto deltas = hurwitzDeterminants(f);
            if (asJson) {
                json arr = json::array();
                for (const auto& d : deltas) arr.push_back(d.toString());
                out << json{{"deltas", arr}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < deltas.size(); ++i)
                    out << (i ? " " : "") << deltas[i].toString();
                out << "\n";
            }
            return 0;
        }
        if (hurStableCmd->parsed()) {
            UniPoly f = detail::parseUniFamily(opt.polys)[0];
            bool stable = isHurwitzStable(f);
            if (asJson)
                out << json{{"value", stable}}.dump() << "\n";
            else
                out << (stable ? "true" : "false") << "\n";
            return 0;
        }

        if (groebnerCmd->parsed()) {
            std::vector<std::string> vars = detail::splitVars(sys.vars);
            MonomialOrder order = detail::parseOrder(sys.order);
            GroebnerBasis gb = buchberger(detail::parseGenerators(sys.gens, vars, order), order);
            if (asJson) {
                json arr = json::array();
                for (const auto& g : gb.generators) arr.push_back(g.toString());
                out << json{{"basis", arr}}.dump() << "\n";
            } else {
                for (const auto& g : gb.generators) out << g.toString() << "\n";
            }
            return 0;
        }
        if (regRepCmd->parsed()) {
            QuotientRing R = detail::makeRing(sys.gens, sys.vars, sys.order);
            MultiPoly f = expandMulti(*parsePoly(sys.f, R.vars()), R.vars(), R.gb().order);
            detail::emitMatrix(out, asJson, regularRepresentation(f, R));
            return 0;
        }
        if (eliminantCmd->parsed()) {
            QuotientRing R = detail::makeRing(sys.gens, sys.vars, sys.order);
            MultiPoly f = expandMulti(*parsePoly(sys.f, R.vars()), R.vars(), R.gb().order);
            UniPoly g = univariateEliminant(f, R, sys.eliminantVar);
            if (asJson)
                out << json{{"polynomial", g.toString()}}.dump() << "\n";
            else
                out << g.toString() << "\n";
            return 0;
        }
        if (rurCmd->parsed()) {
            QuotientRing R = detail::makeRing(sys.gens, sys.vars, sys.order);
            RurTriple rur = rationalUnivariateRepresentation(R, sys.rurVar);
            if (asJson) {
                json coords = json::array();
                for (const auto& c : rur.coords)
                    coords.push_back({{"var", c.var},
                                      {"numerator", c.numerator.toString()},
                                      {"denominator", c.denominator.toString()}});
                out << json{{"separating_form", rur.sepForm.toString()},
                            {"char_poly", rur.charPolynomial.toString()},
                            {"coords", coords}}
                           .dump()
                    << "\n";
            } else {
                out << "separating_form: " << rur.sepForm.toString() << "\n";
                out << "char_poly: " << rur.charPolynomial.toString() << "\n";
                for (const auto& c : rur.coords)
                    out << c.var << " = (" << c.numerator.toString() << ") / ("
                        << c.denominator.toString() << ")\n";
            }
            return 0;
        }
        if (traceFormCmd->parsed()) {
            QuotientRing R = detail::makeRing(sys.gens, sys.vars, sys.order);
            MultiPoly h = expandMulti(*parsePoly(sys.h, R.vars()), R.vars(), R.gb().order);
            detail::emitMatrix(out, asJson, traceForm(h, R).matrix());
            return 0;
        }
        if (traceCountCmd->parsed()) {
            detail::emitValue(out, asJson, traceCount(detail::makeRing(sys.gens, sys.vars, sys.order)));
            return 0;
        }
        if (realCountCmd->parsed()) {
            detail::emitValue(out, asJson, realCount(detail::makeRing(sys.gens, sys.vars, sys.order)));
            return 0;
        }
        if (traceSigCmd->parsed()) {
            QuotientRing R = detail::makeRing(sys.gens, sys.vars, sys.order);
            MultiPoly h = expandMulti(*parsePoly(sys.h, R.vars()), R.vars(), R.gb().order);
            detail::emitValue(out, asJson, signature(traceForm(h, R)));
            return 0;
        }
        err << "no command selected\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace realroots::cli

// gosper: command-line front end for the verification pipelines.
//
// Exit codes: 0 success, 1 residual or identity failure, 2 usage error.

#include "gosper/report_json.hpp"
#include "gosper/sweep.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace gosper;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Args {
    std::string a = "";
    std::string b = "1";
    std::string c = "";
    std::string z = "";
    std::string zi = "0";
    long ell = 1;
    Precision precision = kDefaultPrecision;
    std::string order = "auto";
    std::string tolerance = "1e-30";
    std::size_t trials = 100;
    unsigned ell_max = 5;
    std::uint64_t seed = 42;
    unsigned threads = 0;
    bool json = false;
};

struct Parsed {
    Rational a, b, c;
    std::optional<std::size_t> order;
    Real tolerance;
};

Rational need(const std::string& text, const char* name) {
    if (text.empty()) {
        throw ParameterError(std::string("--") + name + " is required");
    }
    try {
        return parse_rational(text);
    } catch (const ParameterError& e) {
        throw ParameterError(std::string("--") + name + ": " + e.what());
    }
}

Parsed parse(const Args& args, bool want_a, bool want_c) {
    Parsed p{want_a ? need(args.a, "a") : Rational(0), need(args.b, "b"), want_c ? need(args.c, "c") : Rational(0),
             std::nullopt, Real(args.precision)};
    if (args.precision < 32) {
        throw ParameterError("--precision must be at least 32 bits");
    }
    if (args.order != "auto") {
        std::size_t pos = 0;
        long n = -1;
        try {
            n = std::stol(args.order, &pos);
        } catch (const std::exception&) {
        }
        if (n < 0 || pos != args.order.size()) {
            throw ParameterError("--order must be a nonnegative integer or auto");
        }
        p.order = static_cast<std::size_t>(n);
    }
    p.tolerance = Real(args.tolerance, args.precision);
    if (p.tolerance.sign() < 0) {
        throw ParameterError("--tolerance must be nonnegative");
    }
    return p;
}

std::string sci(const Real& x) { return x.to_string(6); }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_verify(const Args& args) {
    const Parsed p = parse(args, true, true);
    const ContigOrder ell(args.ell);
    const VerifyReport rep = verify_theorem(p.a, p.c, ell, args.precision, p.order);
    const bool pass = rep.passed(p.tolerance);
    if (args.json) {
        print_json(to_json(rep, p.tolerance));
        return pass ? kOk : kFail;
    }
    std::cout << "a = " << p.a << ", c = " << p.c << ", l = " << args.ell << ", precision " << args.precision
              << " bits\n";
    std::cout << "F(1-a,-l,2-c;x) = " << rep.terminating.to_string() << '\n';
    std::cout << "q0 = " << rep.q0.series.q0.to_string() << '\n';
    if (rep.no_roots) {
        std::cout << "no roots: the terminating polynomial is constant\n";
    }
    for (const auto& r : rep.records) {
        std::cout << "root " << r.lambda.to_string(25);
        if (r.multiplicity > 1) {
            std::cout << " (multiplicity " << r.multiplicity << ')';
        }
        std::cout << '\n';
        if (r.skipped()) {
            std::cout << "  skipped: " << *r.skip_reason << " (" << r.skip_detail.value_or("") << ")\n";
            continue;
        }
        std::cout << "  F(a,1+l,c;t)     residual " << sci(*r.residual_shifted) << "  path " << r.path_shifted
                  << '\n';
        std::cout << "  F(c-a,c-1-l,c;t) residual " << sci(*r.residual_euler) << "  path " << r.path_euler << '\n';
    }
    std::cout << (pass ? "PASS" : "FAIL") << ": max residual " << sci(rep.max_residual()) << ", tolerance "
              << sci(p.tolerance) << ", " << rep.skipped() << " skipped\n";
    return pass ? kOk : kFail;
}

int cmd_q0(const Args& args) {
    const Parsed p = parse(args, true, true);
    const ContigOrder ell(args.ell);
    const Q0Provenance prov = compute_q0(p.a, p.c, ell, p.order);
    if (args.json) {
        Json methods = Json::array();
        for (auto m : prov.methods) {
            methods.push_back(to_string(m));
        }
        print_json(Json{{"params", {{"a", to_string(p.a)}, {"b", "1"}, {"c", to_string(p.c)}, {"ell", args.ell}}},
                        {"flags", to_json(genericity_flags({p.a, 1, p.c}, ell))},
                        {"records", Json::array({to_json(prov)})},
                        {"verdict", {{"agree", prov.agree}}}});
        return prov.agree ? kOk : kFail;
    }
    std::cout << "q0 = " << prov.series.q0.to_string() << "; r0 = " << prov.series.r0.to_string() << "; methods "
              << (prov.agree ? "agree" : "DISAGREE") << '\n';
    std::cout << "series:   q0 = " << prov.series.q0.to_string() << "; r0 = " << prov.series.r0.to_string() << '\n';
    std::cout << "operator: q0 = " << prov.factored.q0.to_string() << "; r0 = " << prov.factored.r0.to_string()
              << "; reconstruction " << (prov.reconstruction_ok ? "OK" : "FAILED") << '\n';
    if (prov.reversal) {
        std::cout << "reversal: q0 = " << prov.reversal->to_string() << '\n';
    } else {
        std::cout << "reversal: " << prov.reversal_note.value_or("skipped") << '\n';
    }
    std::cout << (prov.agree ? "AGREE" : "DISAGREE") << '\n';
    return prov.agree ? kOk : kFail;
}

std::string shape(const Rational& xe, const Rational& omxe, const Poly& core) {
    std::ostringstream os;
    os << "x^" << xe << " (1-x)^" << omxe << " (" << core.to_string() << ')';
    return os.str();
}

std::string degree_text(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

int cmd_reduce(const Args& args) {
    const Parsed p = parse(args, true, true);
    const ContigOrder ell(args.ell);
    const HypParams hp{p.a, p.b, p.c};
    const DiffOp L = build_L(hp);
    const DiffOp H = build_H(p.b, ell);
    const ReductionData red = right_reduce(H, L);
    const bool ok = reconstruct(red, L) == H;
    const FactoredRemainder fr = factor_remainder(red.q, red.r, ell);
    const GenericityFlags flags = genericity_flags(hp, ell);
    if (args.json) {
        Json rec{{"H", H.to_string()},
                 {"L", L.to_string()},
                 {"p", red.quotient.to_string()},
                 {"q", red.q.to_string()},
                 {"r", red.r.to_string()},
                 {"factored", to_json(fr)}};
        print_json(Json{{"params", {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)},
                                    {"ell", args.ell}}},
                        {"flags", to_json(flags)},
                        {"records", Json::array({rec})},
                        {"verdict", {{"reconstruction", ok ? "OK" : "FAILED"}}}});
        return ok ? kOk : kFail;
    }
    std::cout << "H = " << H.to_string() << '\n';
    std::cout << "L = " << L.to_string() << '\n';
    std::cout << "p = " << (red.quotient.order() ? red.quotient.to_string() : "0") << '\n';
    std::cout << "q = " << red.q.to_string() << " = " << shape(fr.v0, fr.v1, fr.q0_core) << '\n';
    std::cout << "r = " << red.r.to_string() << " = " << shape(fr.w0, fr.w1, fr.r0_core) << '\n';
    std::cout << "exponents (v0,v1,g,w0,w1,h) = (" << fr.v0 << ',' << fr.v1 << ',' << degree_text(fr.g) << ','
              << fr.w0 << ',' << fr.w1 << ',' << degree_text(fr.h) << ")\n";
    std::cout << "q0 = " << fr.q0.to_string() << "; r0 = " << fr.r0.to_string() << '\n';
    std::cout << "flags A1=" << flags.a1 << " A2=" << flags.a2 << " E1=" << flags.e1 << " E2'=" << flags.e2;
    if (flags.e2_note) {
        std::cout << " (" << *flags.e2_note << ')';
    }
    std::cout << '\n' << "reconstruction " << (ok ? "OK" : "FAILED") << '\n';
    return ok ? kOk : kFail;
}

int cmd_gosper(const Args& args) {
    const Parsed p = parse(args, true, false);
    const GosperReport rep = gosper_check(p.a, p.b, args.precision);
    const bool pass = rep.exact() ? *rep.exact_lhs == *rep.exact_rhs : !(rep.residual > p.tolerance);
    if (args.json) {
        print_json(to_json(rep, p.tolerance));
        return pass ? kOk : kFail;
    }
    std::cout << "F(1-a,b,b+2;b/(a+b)) at a = " << p.a << ", b = " << p.b << ", argument " << rep.argument << '\n';
    if (rep.exact()) {
        std::cout << "lhs = " << *rep.exact_lhs << "\nrhs = " << *rep.exact_rhs << "\nresidual 0 (exact)\n";
    } else {
        std::cout << "lhs = " << rep.lhs.to_string(40) << "\nrhs = " << rep.rhs.to_string(40) << "\nresidual "
                  << sci(rep.residual) << "  path " << rep.path << '\n';
    }
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kFail;
}

int cmd_sweep(const Args& args) {
    const Parsed p = parse(args, false, false);
    const auto trials = draw_trials(args.trials, args.ell_max, args.seed);
    const SweepSummary s = run_sweep(trials, args.precision, p.tolerance, args.threads);
    const std::size_t failures = s.failures();
    if (args.json) {
        Json records = Json::array();
        for (const auto& o : s.outcomes) {
            Json r{{"a", to_string(o.trial.a)}, {"c", to_string(o.trial.c)}, {"ell", o.trial.ell}, {"pass", o.passed}};
            if (o.report) {
                r["roots"] = o.report->records.size();
                r["skipped"] = o.report->skipped();
                r["max_residual"] = o.report->max_residual().to_string();
            }
            if (o.error) {
                r["error"] = *o.error;
            }
            records.push_back(r);
        }
        print_json(Json{{"params", {{"trials", args.trials}, {"ell_max", args.ell_max}, {"seed", args.seed},
                                    {"precision", args.precision}}},
                        {"flags", Json::object()},
                        {"records", records},
                        {"verdict", {{"pass", failures == 0}, {"failures", failures}, {"roots", s.roots},
                                     {"skipped_roots", s.skipped_roots}, {"tolerance", sci(p.tolerance)}}}});
        return failures == 0 ? kOk : kFail;
    }
    for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
        const auto& o = s.outcomes[i];
        if (o.passed) {
            continue;
        }
        std::cout << "trial " << i << " FAIL a = " << o.trial.a << ", c = " << o.trial.c << ", l = " << o.trial.ell;
        if (o.error) {
            std::cout << ": " << *o.error;
        } else {
            std::cout << ": max residual " << sci(o.report->max_residual());
        }
        std::cout << '\n';
    }
    std::cout << s.roots << " roots checked, " << s.skipped_roots << " skipped\n";
    std::cout << args.trials << " trials, " << failures << " failures\n";
    return failures == 0 ? kOk : kFail;
}

int cmd_eval(const Args& args) {
    const Parsed p = parse(args, true, true);
    const CFloat z(Real(need(args.z, "z"), args.precision), Real(need(args.zi, "zi"), args.precision));
    const EvalResult r = hyp2f1_num({p.a, p.b, p.c}, z, args.precision);
    const bool ok = r.path.front() != EvalPath::unsupported;
    if (args.json) {
        print_json(Json{{"params", {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)},
                                    {"z", to_json(z)}, {"precision", args.precision}}},
                        {"flags", Json::object()},
                        {"records", Json::array({Json{{"value", to_json(r.value)},
                                                      {"est_error", r.est_error.to_string()},
                                                      {"path", r.path_string()}}})},
                        {"verdict", {{"supported", ok}}}});
        return ok ? kOk : kFail;
    }
    if (!ok) {
        std::cout << "unsupported: no expansion converges fast enough at this argument\n";
        return kFail;
    }
    std::cout << r.value.to_string() << '\n' << "path " << r.path_string() << ", est. error " << sci(r.est_error)
              << '\n';
    return kOk;
}

int cmd_roots(const Args& args) {
    const Parsed p = parse(args, true, true);
    const ContigOrder ell(args.ell);
    const Poly P = terminating_poly({1 - p.a, Rational(-static_cast<long>(args.ell)), 2 - p.c});
    if (P.degree().value_or(0) == 0) {
        if (args.json) {
            print_json(Json{{"params", {{"poly", to_json(P)}}},
                            {"flags", Json::object()},
                            {"records", Json::array()},
                            {"verdict", {{"no_roots", true}}}});
        } else {
            std::cout << "F(1-a,-l,2-c;x) = " << P.to_string() << "\nno roots\n";
        }
        return kOk;
    }
    const RootSet s = find_roots(P, args.precision);
    if (args.json) {
        Json records = Json::array();
        for (const auto& r : s.roots) {
            records.push_back(Json{{"lambda", to_json(r.value)}, {"multiplicity", r.multiplicity}});
        }
        print_json(Json{{"params", {{"poly", to_json(P)}, {"precision", args.precision}}},
                        {"flags", Json::object()},
                        {"records", records},
                        {"verdict", {{"residual_bound", s.residual_bound.to_string()}}}});
        return kOk;
    }
    std::cout << "F(1-a,-l,2-c;x) = " << P.to_string() << '\n';
    for (const auto& r : s.roots) {
        std::cout << r.value.to_string(30);
        if (r.multiplicity > 1) {
            std::cout << " (multiplicity " << r.multiplicity << ')';
        }
        std::cout << '\n';
    }
    std::cout << "residual bound " << sci(s.residual_bound) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric checks of contiguous hypergeometric evaluations"};
    app.require_subcommand(1);
    Args args;
    int code = kOk;

    auto common = [&](CLI::App* sub, bool needs_ell) {
        sub->add_option("--a", args.a, "parameter a, as p/q");
        sub->add_option("--b", args.b, "parameter b, as p/q")->capture_default_str();
        sub->add_option("--c", args.c, "parameter c, as p/q");
        if (needs_ell) {
            sub->add_option("--ell", args.ell, "contiguity order l >= 1")->capture_default_str();
        }
        sub->add_option("--precision", args.precision, "working precision in bits")->capture_default_str();
        sub->add_option("--order", args.order, "series truncation order, or auto (l+32)")->capture_default_str();
        sub->add_option("--tolerance", args.tolerance, "relative residual tolerance")->capture_default_str();
        sub->add_flag("--json", args.json, "emit a JSON report");
    };
    using Handler = int (*)(const Args&);
    auto add = [&](const char* name, const char* help, Handler h, bool needs_ell) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub, needs_ell);
        sub->callback([&code, &args, h] { code = h(args); });
        return sub;
    };
    add("verify", "check both evaluations at every root", cmd_verify, true);
    add("q0", "q0 and r0 by each method", cmd_q0, true);
    add("reduce", "right division of H(l) by L", cmd_reduce, true);
    add("gosper", "check F(1-a,b,b+2;b/(a+b)) = (b+1)(a/(a+b))^a", cmd_gosper, false);
    CLI::App* sweep = add("sweep", "seeded random verify runs", cmd_sweep, false);
    sweep->add_option("--trials", args.trials, "number of random trials")->capture_default_str();
    sweep->add_option("--ell-max", args.ell_max, "largest l drawn")->capture_default_str();
    sweep->add_option("--seed", args.seed, "random seed")->capture_default_str();
    sweep->add_option("--threads", args.threads, "worker threads, 0 for all cores")->capture_default_str();
    CLI::App* eval = add("eval", "F(a,b,c;z)", cmd_eval, false);
    eval->add_option("--z", args.z, "real part of z, as p/q");
    eval->add_option("--zi", args.zi, "imaginary part of z, as p/q")->capture_default_str();
    add("roots", "roots of F(1-a,-l,2-c;x)", cmd_roots, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericError& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kUsage;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << '\n';
        return kFail;
    }
    return code;
}

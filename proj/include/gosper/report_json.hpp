#pragma once

// JSON encoding of verification reports. Rationals are emitted as "p/q"
// strings and floats as decimal strings carrying the full working
// precision, so a report can be re-checked offline.
//
// Every report has the top-level keys "params", "flags", "records" and
// "verdict".

#include "gosper/verify.hpp"

#include <json.hpp>

#include <string>

namespace gosper {

using Json = nlohmann::ordered_json;

inline Json to_json(const CFloat& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

inline Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"text", p.to_string()}, {"coeffs", coeffs}};
}

inline Json degree_json(const Degree& d) { return d ? Json(*d) : Json(nullptr); }

inline Json to_json(const GenericityFlags& f) {
    Json j{{"A1", f.a1}, {"A2", f.a2}, {"E1", f.e1}, {"E2prime", f.e2}};
    if (f.e2_note) {
        j["E2prime_note"] = *f.e2_note;
    }
    return j;
}

inline Json to_json(const FactoredRemainder& fr) {
    return Json{{"v0", to_string(fr.v0)},  {"v1", to_string(fr.v1)}, {"g", degree_json(fr.g)},
                {"w0", to_string(fr.w0)},  {"w1", to_string(fr.w1)}, {"h", degree_json(fr.h)},
                {"q0", to_json(fr.q0)},    {"r0", to_json(fr.r0)}};
}

inline Json to_json(const Q0Provenance& q) {
    Json methods = Json::array();
    for (auto m : q.methods) {
        methods.push_back(to_string(m));
    }
    Json j{{"q0", to_json(q.series.q0)},
           {"r0", to_json(q.series.r0)},
           {"methods", methods},
           {"agree", q.agree},
           {"reconstruction_ok", q.reconstruction_ok},
           {"factored", to_json(q.factored)}};
    if (q.reversal_note) {
        j["reversal_note"] = *q.reversal_note;
    }
    return j;
}

inline Json to_json(const RootRecord& r) {
    Json j{{"lambda", to_json(r.lambda)}, {"multiplicity", r.multiplicity}};
    if (r.skip_reason) {
        j["skip_reason"] = *r.skip_reason;
        j["skip_detail"] = r.skip_detail.value_or("");
        return j;
    }
    j["shifted"] = Json{{"lhs", to_json(*r.lhs_shifted)},
                        {"rhs", to_json(*r.rhs_shifted)},
                        {"residual", r.residual_shifted->to_string()},
                        {"path", r.path_shifted}};
    j["euler"] = Json{{"lhs", to_json(*r.lhs_euler)},
                      {"rhs", to_json(*r.rhs_euler)},
                      {"residual", r.residual_euler->to_string()},
                      {"path", r.path_euler}};
    return j;
}

inline Json to_json(const VerifyReport& rep, const Real& tolerance) {
    Json records = Json::array();
    for (const auto& r : rep.records) {
        records.push_back(to_json(r));
    }
    const bool pass = rep.passed(tolerance);
    Json verdict{{"pass", pass},
                 {"tolerance", tolerance.to_string(6)},
                 {"max_residual", rep.max_residual().to_string()},
                 {"roots", rep.records.size()},
                 {"skipped", rep.skipped()},
                 {"no_roots", rep.no_roots}};
    Json params{{"a", to_string(rep.a)},
                {"b", "1"},
                {"c", to_string(rep.c)},
                {"ell", rep.ell},
                {"precision", rep.precision},
                {"terminating_poly", to_json(rep.terminating)},
                {"q0", to_json(rep.q0)}};
    if (rep.root_residual_bound) {
        params["root_residual_bound"] = rep.root_residual_bound->to_string();
    }
    return Json{{"params", params}, {"flags", to_json(rep.flags)}, {"records", records}, {"verdict", verdict}};
}

inline Json to_json(const GosperReport& rep, const Real& tolerance) {
    Json rec{{"argument", to_string(rep.argument)},
             {"lhs", to_json(rep.lhs)},
             {"rhs", to_json(rep.rhs)},
             {"residual", rep.residual.to_string()},
             {"path", rep.path}};
    if (rep.exact()) {
        rec["exact_lhs"] = to_string(*rep.exact_lhs);
        rec["exact_rhs"] = to_string(*rep.exact_rhs);
    }
    const bool pass = rep.exact() ? *rep.exact_lhs == *rep.exact_rhs : !(rep.residual > tolerance);
    return Json{{"params", {{"a", to_string(rep.a)}, {"b", to_string(rep.b)}, {"precision", rep.precision}}},
                {"flags", Json{{"exact", rep.exact()}}},
                {"records", Json::array({rec})},
                {"verdict", {{"pass", pass}, {"tolerance", tolerance.to_string(6)}}}};
}

}  // namespace gosper

#include "sstk/report_io.hpp"

#include "sstk/parse.hpp"

#include <sstream>

namespace sstk {

namespace {

std::string kind_tag(Verdict v)
{
    switch (v) {
    case Verdict::Symplectic: return "symplectic";
    case Verdict::BM: return "bm";
    case Verdict::MFolded: return "m-folded";
    case Verdict::MixedDirac: return "mixed-dirac";
    case Verdict::DegenerateNontransverse: return "degenerate-nontransverse";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict kind_from_tag(const std::string& s)
{
    if (s == "symplectic") return Verdict::Symplectic;
    if (s == "bm") return Verdict::BM;
    if (s == "m-folded") return Verdict::MFolded;
    if (s == "mixed-dirac") return Verdict::MixedDirac;
    if (s == "degenerate-nontransverse") return Verdict::DegenerateNontransverse;
    return Verdict::Inconclusive;
}

Rat rat_from_str(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace

Json report_to_json(const SingularityReport& rep)
{
    Json j;
    j["verdict"] = rep.verdict_string();
    j["kind"] = kind_tag(rep.verdict);
    j["m"] = rat_str(rep.m);
    j["closed"] = rep.closed;
    j["top_coefficient"] = rep.top_coeff.str();
    Json surfaces = Json::array();
    for (const auto& f : rep.surfaces) {
        Json s;
        s["label"] = f.surface.label;
        s["polynomial"] = SymExpr(f.surface.h).str();
        s["order"] = rat_str(f.order);
        s["coeff_pole_order"] = rat_str(f.coeff_pole_order);
        s["coeff_zero_order"] = rat_str(f.coeff_zero_order);
        s["transverse"] = f.transverse;
        s["rescaled_nonzero"] = f.rescaled_nonzero;
        s["bm_pole_free"] = f.bm_pole_free;
        s["user_supplied"] = f.surface.user_supplied;
        s["needs_confirmation"] = f.surface.needs_confirmation;
        Json samples = Json::array();
        for (const auto& smp : f.surface.samples) {
            Json e;
            for (const auto& [k, v] : smp) e[k] = v;
            samples.push_back(e);
        }
        s["samples"] = samples;
        s["notes"] = f.notes;
        surfaces.push_back(s);
    }
    j["surfaces"] = surfaces;
    if (rep.morse) {
        Json m;
        m["vars"] = rep.morse->vars;
        Json pt;
        for (const auto& [k, v] : rep.morse->point) pt[k] = v;
        m["point"] = pt;
        m["eigenvalues"] = rep.morse->eigenvalues;
        m["signature"] = rep.morse->signature;
        m["degenerate"] = rep.morse->degenerate;
        j["morse"] = m;
    } else {
        j["morse"] = nullptr;
    }
    j["warnings"] = rep.warnings;
    j["notes"] = rep.notes;
    return j;
}

SingularityReport report_from_json(const Json& j)
{
    SingularityReport rep;
    rep.verdict = kind_from_tag(j.at("kind").get<std::string>());
    rep.m = rat_from_str(j.at("m").get<std::string>());
    rep.closed = j.at("closed").get<bool>();
    rep.top_coeff = parse_expr(j.at("top_coefficient").get<std::string>());
    for (const auto& s : j.at("surfaces")) {
        SurfaceFinding f;
        f.surface.label = s.at("label").get<std::string>();
        SymExpr p = parse_expr(s.at("polynomial").get<std::string>());
        if (!p.is_polynomial()) throw ParseError("surface polynomial has a denominator");
        f.surface.h = p.num();
        f.surface.user_supplied = s.at("user_supplied").get<bool>();
        f.surface.needs_confirmation = s.at("needs_confirmation").get<bool>();
        for (const auto& e : s.at("samples")) {
            std::map<std::string, double> smp;
            for (auto it = e.begin(); it != e.end(); ++it) smp[it.key()] = it.value().get<double>();
            f.surface.samples.push_back(std::move(smp));
        }
        f.order = rat_from_str(s.at("order").get<std::string>());
        f.coeff_pole_order = rat_from_str(s.at("coeff_pole_order").get<std::string>());
        f.coeff_zero_order = rat_from_str(s.at("coeff_zero_order").get<std::string>());
        f.transverse = s.at("transverse").get<bool>();
        f.rescaled_nonzero = s.at("rescaled_nonzero").get<bool>();
        f.bm_pole_free = s.at("bm_pole_free").get<bool>();
        f.notes = s.at("notes").get<std::vector<std::string>>();
        rep.surfaces.push_back(std::move(f));
    }
    if (!j.at("morse").is_null()) {
        MorseData m;
        m.vars = j["morse"].at("vars").get<std::vector<std::string>>();
        for (auto it = j["morse"].at("point").begin(); it != j["morse"].at("point").end(); ++it)
            m.point[it.key()] = it.value().get<double>();
        m.eigenvalues = j["morse"].at("eigenvalues").get<std::vector<double>>();
        m.signature = j["morse"].at("signature").get<std::string>();
        m.degenerate = j["morse"].at("degenerate").get<bool>();
        rep.morse = m;
    }
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

std::string report_to_text(const SingularityReport& rep)
{
    std::ostringstream os;
    os << "verdict: " << rep.verdict_string() << "\n";
    os << "closed:  " << (rep.closed ? "yes" : "no") << "\n";
    os << "top coefficient: " << rep.top_coeff.str() << "\n";
    for (const auto& f : rep.surfaces) {
        os << "surface {" << f.surface.label << " = 0}: order " << rat_str(f.order);
        if (f.coeff_pole_order < 0)
            os << ", coefficient poles to order " << rat_str(-f.coeff_pole_order);
        if (f.order == 0 && f.coeff_zero_order > 0)
            os << ", some coefficient vanishes to order " << rat_str(f.coeff_zero_order);
        if (f.order == 1) os << (f.transverse ? ", transverse" : ", NOT transverse");
        if (f.surface.needs_confirmation) os << " (degree-2 candidate, user-confirmable)";
        for (const auto& n : f.notes) os << "\n    note: " << n;
        os << "\n";
    }
    if (rep.morse) {
        os << "critical point of the top coefficient at (";
        bool first = true;
        for (const auto& v : rep.morse->vars) {
            if (!first) os << ", ";
            first = false;
            os << v << " = " << rep.morse->point.at(v);
        }
        os << "): signature " << rep.morse->signature
           << (rep.morse->degenerate ? " [degenerate Hessian]" : "") << "\n";
    }
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    return os.str();
}

bool reports_equivalent(const SingularityReport& a, const SingularityReport& b, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.verdict != b.verdict)
        return fail("verdict: " + a.verdict_string() + " vs " + b.verdict_string());
    if ((a.verdict == Verdict::BM || a.verdict == Verdict::MFolded) && a.m != b.m)
        return fail("order m: " + rat_str(a.m) + " vs " + rat_str(b.m));
    // Every surface of b must appear in a with the same order data.
    for (const auto& fb : b.surfaces) {
        bool found = false;
        for (const auto& fa : a.surfaces) {
            if (!(SymExpr(fa.surface.h).equals(SymExpr(fb.surface.h)) ||
                  SymExpr(fa.surface.h).equals(-SymExpr(fb.surface.h))))
                continue;
            found = true;
            if (fa.order != fb.order)
                return fail("surface " + fb.surface.label + ": order " + rat_str(fa.order) +
                            " vs " + rat_str(fb.order));
            if (fa.coeff_pole_order != fb.coeff_pole_order)
                return fail("surface " + fb.surface.label + ": coefficient pole order differs");
        }
        if (!found) return fail("surface " + fb.surface.label + " missing");
    }
    if (a.morse.has_value() != b.morse.has_value()) return fail("morse data presence differs");
    if (a.morse && a.morse->signature != b.morse->signature)
        return fail("morse signature: " + a.morse->signature + " vs " + b.morse->signature);
    return true;
}

} // namespace sstk

#include "sstk/form_io.hpp"

#include "sstk/parse.hpp"

#include <sstream>

namespace sstk {

namespace {

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string strip(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct DocParser {
    std::vector<std::string> lines;
    size_t ln = 0;
    FormDocument doc;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("line " + std::to_string(ln + 1) + ": " + msg);
    }

    const Chart& chart(const std::string& name) const
    {
        auto it = doc.charts.find(name);
        if (it == doc.charts.end()) throw ParseError("unknown chart '" + name + "'");
        return it->second;
    }

    void parse_chart(const std::vector<std::string>& head)
    {
        if (head.size() != 2) fail("usage: chart <name>");
        std::vector<VarSpec> coords;
        std::vector<SqrtSym> sqrts;
        std::set<std::string> positive, radial, angular;
        for (++ln; ln < lines.size(); ++ln) {
            std::string line = strip(lines[ln]);
            if (line.empty() || line[0] == '#') continue;
            if (line == "end") break;
            auto eq = line.find('=');
            auto words = split_ws(eq == std::string::npos ? line : line.substr(0, eq));
            if (words.empty()) fail("empty declaration");
            const std::string& kw = words[0];
            if (kw == "coords") {
                for (size_t i = 1; i < words.size(); ++i) coords.push_back({words[i]});
            } else if (kw == "radial") {
                radial.insert(words.begin() + 1, words.end());
            } else if (kw == "angular") {
                angular.insert(words.begin() + 1, words.end());
            } else if (kw == "positive") {
                positive.insert(words.begin() + 1, words.end());
            } else if (kw == "sqrtsym") {
                if (words.size() != 2 || eq == std::string::npos)
                    fail("usage: sqrtsym <name> = <polynomial>");
                SymExpr def = parse_expr(line.substr(eq + 1));
                if (!def.is_polynomial()) fail("sqrtsym definition must be a polynomial");
                sqrts.push_back({words[1], def.num()});
            } else {
                fail("unknown chart keyword '" + kw + "'");
            }
        }
        for (auto& v : coords) {
            v.radial = radial.count(v.name) > 0;
            v.angular = angular.count(v.name) > 0;
        }
        doc.charts.emplace(head[1], Chart(head[1], coords, sqrts, positive));
    }

    void parse_form(const std::vector<std::string>& head)
    {
        // form <name> on <chart> degree <k>
        if (head.size() != 6 || head[2] != "on" || head[4] != "degree")
            fail("usage: form <name> on <chart> degree <k>");
        const Chart& c = chart(head[3]);
        DiffForm f(c, std::stoi(head[5]));
        auto radical = c.radical_ok();
        for (++ln; ln < lines.size(); ++ln) {
            std::string line = strip(lines[ln]);
            if (line.empty() || line[0] == '#') continue;
            if (line == "end") break;
            auto close = line.find(']');
            auto eq = line.find('=', close);
            if (line[0] != '[' || close == std::string::npos || eq == std::string::npos)
                fail("expected '[v1, v2, ...] = expr'");
            std::string idxpart = line.substr(1, close - 1);
            for (auto& ch : idxpart)
                if (ch == ',') ch = ' ';
            std::vector<int> idx;
            for (const auto& nm : split_ws(idxpart)) {
                auto i = c.index(nm);
                if (!i) fail("unknown coordinate '" + nm + "' on chart " + c.name());
                idx.push_back(*i);
            }
            SymExpr coef = parse_expr(line.substr(eq + 1), &radical);
            c.validate_coeff(coef);
            f.add_term(idx, coef);
        }
        doc.forms.emplace(head[1], std::move(f));
    }

    void parse_map(const std::vector<std::string>& head)
    {
        // map <name> from <src> to <dst>
        if (head.size() != 6 || head[2] != "from" || head[4] != "to")
            fail("usage: map <name> from <chart> to <chart>");
        const Chart& src = chart(head[3]);
        const Chart& dst = chart(head[5]);
        std::map<std::string, MapComponent> comps;
        for (++ln; ln < lines.size(); ++ln) {
            std::string line = strip(lines[ln]);
            if (line.empty() || line[0] == '#') continue;
            if (line == "end") break;
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("expected '<target> = <expr>'");
            auto lhs = split_ws(line.substr(0, eq));
            std::string rhs = strip(line.substr(eq + 1));
            if (lhs.size() == 1) {
                if (!dst.index(lhs[0])) fail("'" + lhs[0] + "' is not a target coordinate");
                if (rhs == "opaque")
                    comps[lhs[0]] = MapComponent::opaque_with_diff({});
                else
                    comps[lhs[0]] = MapComponent::of(parse_expr(rhs));
            } else if (lhs.size() == 5 && lhs[0] == "d" && lhs[2] == "/" && lhs[3] == "d") {
                // d <target> / d <sourcevar> = expr
                auto it = comps.find(lhs[1]);
                if (it == comps.end() || !it->second.opaque())
                    fail("differential line before 'opaque' declaration of " + lhs[1]);
                if (!src.index(lhs[4])) fail("'" + lhs[4] + "' is not a source coordinate");
                it->second.opaque_diff[lhs[4]] = parse_expr(rhs);
            } else {
                fail("cannot parse map line");
            }
        }
        std::vector<MapComponent> ordered;
        for (const auto& v : dst.vars()) {
            auto it = comps.find(v.name);
            if (it == comps.end()) fail("missing component for target coordinate " + v.name);
            ordered.push_back(it->second);
        }
        doc.maps.emplace(head[1], CoordinateMap(head[1], src, dst, std::move(ordered)));
    }

    void run(const std::string& text)
    {
        std::istringstream is(text);
        std::string l;
        while (std::getline(is, l)) lines.push_back(l);
        for (ln = 0; ln < lines.size(); ++ln) {
            std::string line = strip(lines[ln]);
            if (line.empty() || line[0] == '#') continue;
            auto words = split_ws(line);
            if (words[0] == "chart")
                parse_chart(words);
            else if (words[0] == "form")
                parse_form(words);
            else if (words[0] == "map")
                parse_map(words);
            else
                fail("expected 'chart', 'form' or 'map', got '" + words[0] + "'");
        }
    }
};

} // namespace

FormDocument parse_form_document(const std::string& text,
                                 const std::map<std::string, Chart>& known_charts)
{
    DocParser p;
    p.doc.charts = known_charts;
    p.run(text);
    return p.doc;
}

std::string chart_to_text(const Chart& c)
{
    std::ostringstream os;
    os << "chart " << c.name() << "\n  coords";
    for (const auto& v : c.vars()) os << " " << v.name;
    os << "\n";
    std::string radial, angular;
    for (const auto& v : c.vars()) {
        if (v.radial) radial += " " + v.name;
        if (v.angular) angular += " " + v.name;
    }
    if (!radial.empty()) os << "  radial" << radial << "\n";
    if (!angular.empty()) os << "  angular" << angular << "\n";
    if (!c.positive_params().empty()) {
        os << "  positive";
        for (const auto& p : c.positive_params()) os << " " << p;
        os << "\n";
    }
    for (const auto& d : c.derived())
        os << "  sqrtsym " << d.name << " = " << d.square.str() << "\n";
    os << "end\n";
    return os.str();
}

std::string form_to_text(const DiffForm& f, const std::string& name)
{
    std::ostringstream os;
    os << "form " << name << " on " << f.chart().name() << " degree " << f.degree() << "\n";
    for (const auto& [idx, c] : f.coeffs()) {
        os << "  [";
        for (size_t i = 0; i < idx.size(); ++i)
            os << (i ? ", " : "") << f.chart().var(idx[i]).name;
        os << "] = " << c.str() << "\n";
    }
    os << "end\n";
    return os.str();
}

std::string map_to_text(const CoordinateMap& m)
{
    std::ostringstream os;
    os << "map " << m.name() << " from " << m.source().name() << " to " << m.target().name()
       << "\n";
    for (int j = 0; j < m.target().dim(); ++j) {
        const std::string& tn = m.target().var(j).name;
        const MapComponent& mc = m.components()[j];
        if (!mc.opaque()) {
            os << "  " << tn << " = " << mc.expr->str() << "\n";
        } else {
            os << "  " << tn << " = opaque\n";
            for (const auto& [v, e] : mc.opaque_diff)
                os << "  d " << tn << " / d " << v << " = " << e.str() << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

} // namespace sstk

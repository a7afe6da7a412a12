#include "wpc/serialize.hpp"

#include <sstream>

#include "wpc/expr.hpp"

namespace wpc {

json json_int(const mpz_class& z) {
    if (z.fits_slong_p())
        return static_cast<long long>(z.get_si());
    return z.get_str();
}

json json_rational(const Rational& r) {
    return r.str();
}

json json_quad(const QuadExtElem& x) {
    if (auto v = x.as_rational())
        return json_rational(*v);
    json j;
    j["a"] = json_rational(x.a());
    j["b"] = json_rational(x.b());
    if (x.field().mode == QuadMode::Omega)
        j["mode"] = "omega";
    else
        j["d"] = json_rational(x.field().d);
    return j;
}

json json_weights(const WeightType& p) {
    return json(p.weights);
}

json json_subgroup(const WeightType& p, const Subgroup& h) {
    json gens = json::array();
    for (const LElement& g : h.generators)
        gens.push_back(format_element(p, g));
    json elems = json::array();
    for (const LElement& e : h.elements)
        elems.push_back(format_element(p, e));
    return json{{"generators", gens}, {"order", h.order()}, {"elements", elems}};
}

json json_quotient(const QuotientCurve& q) {
    json full = json::array();
    for (const auto& [d, n] : q.full_weights)
        full.push_back(json::array({d, n}));
    return json{
        {"genus", q.genus},
        {"weights", q.weights},
        {"full_weights", full},
        {"order", q.order},
        {"smooth", q.smooth},
    };
}

json json_kind(const CurveKind& k) {
    json j;
    switch (k.tag) {
        case CurveKind::Tag::WplDomestic: j["class"] = "wpl_domestic"; break;
        case CurveKind::Tag::WplTubular: j["class"] = "wpl_tubular"; break;
        case CurveKind::Tag::WplWild: j["class"] = "wpl_wild"; break;
        case CurveKind::Tag::SmoothElliptic: j["class"] = "smooth_elliptic"; break;
        case CurveKind::Tag::WeightedElliptic: j["class"] = "weighted_elliptic"; break;
        case CurveKind::Tag::HigherGenus:
            j["class"] = "higher_genus";
            j["genus"] = k.genus;
            break;
    }
    return j;
}

json json_param_orbit(const ParamOrbit& o) {
    json reps = json::array();
    for (const QuadExtElem& r : o.reps)
        reps.push_back(json_quad(r));
    return json{{"orbit", reps}, {"j", json_quad(o.j)}};
}

json json_tubes(const TubeDecomposition& d) {
    json parts = json::array();
    for (const auto& [rank, count] : d.parts)
        parts.push_back(json::array({rank, count}));
    return json{{"parts", parts}};
}

json json_row(const TableRow& row) {
    json j;
    j["weights"] = json_weights(row.weights);
    j["subgroup"] = json_subgroup(row.weights, row.subgroup);
    j["key"] = row.key.str();
    j["quotient"] = json_quotient(row.quotient);
    j["kind"] = json_kind(row.kind);
    if (row.transform)
        j["transform"] = tubular_transform_name(*row.transform);
    if (row.param)
        j["param"] = json_param_orbit(*row.param);
    return j;
}

json json_rows(const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const TableRow& r : rows)
        j.push_back(json_row(r));
    return j;
}

namespace {

std::string weights_str(const std::vector<int>& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

std::string subgroup_str(const WeightType& p, const Subgroup& h) {
    if (h.generators.empty())
        return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        if (i) out += ", ";
        out += format_element(p, h.generators[i]);
    }
    return out + ">";
}

std::string orbit_str(const ParamOrbit& o) {
    std::string out = "{";
    for (std::size_t i = 0; i < o.reps.size(); ++i) {
        if (i) out += ", ";
        out += o.reps[i].str();
    }
    return out + "}";
}

}  // namespace

std::string markdown_table(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "| Weights | Subgroup | Quotient | Genus | Class | Parameter |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const TableRow& r : rows) {
        std::string param;
        if (r.transform)
            param = tubular_transform_name(*r.transform);
        if (r.param) {
            if (!param.empty()) param += " ";
            param += orbit_str(*r.param);
        }
        os << "| " << r.weights.str()
           << " | " << subgroup_str(r.weights, r.subgroup)
           << " | " << weights_str(r.quotient.weights)
           << " | " << r.quotient.genus
           << " | " << r.kind.str()
           << " | " << param << " |\n";
    }
    return os.str();
}

}  // namespace wpc

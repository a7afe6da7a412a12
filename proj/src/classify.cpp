#include "wpc/classify.hpp"

#include <algorithm>

namespace wpc {

std::string wpl_type_name(WplType t) {
    switch (t) {
    case WplType::Domestic: return "domestic";
    case WplType::Tubular: return "tubular";
    case WplType::Wild: return "wild";
    }
    return "?";
}

std::string CurveKind::str() const {
    switch (tag) {
    case Tag::WplDomestic: return "wpl_domestic";
    case Tag::WplTubular: return "wpl_tubular";
    case Tag::WplWild: return "wpl_wild";
    case Tag::SmoothElliptic: return "smooth_elliptic";
    case Tag::WeightedElliptic: return "weighted_elliptic";
    case Tag::HigherGenus: return "higher_genus:" + std::to_string(genus);
    }
    return "?";
}

Rational euler_char(const WeightType& p) {
    validate_weights(p);
    Rational chi(2);
    for (int w : p.weights)
        chi -= Rational(1) - Rational(1, w);
    // Cross-check: chi = -delta(omega)/lcm.
    Rational via_omega = Rational(-delta(p, dualizing_element(p)), p.lcm());
    if (chi != via_omega)
        throw internal_check("euler characteristic disagrees with -delta(omega)/lcm");
    return chi;
}

WplType wpl_type(const WeightType& p) {
    Rational chi = euler_char(p);
    WplType by_sign = chi.sign() > 0   ? WplType::Domestic
                      : chi.sign() < 0 ? WplType::Wild
                                       : WplType::Tubular;

    // Independent route: the finite weight lists, on the sorted sequence
    // with weight-1 entries (unweighted points) dropped.
    std::vector<int> w;
    for (int x : p.weights)
        if (x > 1)
            w.push_back(x);
    std::sort(w.begin(), w.end());

    WplType by_list;
    if (w.size() <= 2 || (w.size() == 3 && w[0] == 2 && w[1] == 2) ||
        w == std::vector<int>{2, 3, 3} || w == std::vector<int>{2, 3, 4} ||
        w == std::vector<int>{2, 3, 5})
        by_list = WplType::Domestic;
    else if (w == std::vector<int>{2, 2, 2, 2} || w == std::vector<int>{3, 3, 3} ||
             w == std::vector<int>{2, 4, 4} || w == std::vector<int>{2, 3, 6})
        by_list = WplType::Tubular;
    else
        by_list = WplType::Wild;

    if (by_sign != by_list)
        throw internal_check("sign of chi disagrees with the weight lists for " + p.str());
    return by_sign;
}

bool contains_dualizing(const WeightType& p, const Subgroup& h) {
    LElement omega = dualizing_element(p);
    if (!is_torsion(p, omega))
        return false;
    return subgroup_contains(h, omega);
}

CurveKind curve_kind(const QuotientCurve& q) {
    if (q.genus == 0) {
        switch (wpl_type(WeightType(q.weights))) {
        case WplType::Domestic: return {CurveKind::Tag::WplDomestic, 0};
        case WplType::Tubular: return {CurveKind::Tag::WplTubular, 0};
        case WplType::Wild: return {CurveKind::Tag::WplWild, 0};
        }
    }
    if (q.genus == 1)
        return {q.weights.empty() ? CurveKind::Tag::SmoothElliptic
                                  : CurveKind::Tag::WeightedElliptic,
                1};
    return {CurveKind::Tag::HigherGenus, q.genus};
}

bool trichotomy_check(const WeightType& p, const Subgroup& h) {
    CurveKind kind = curve_kind(quotient_curve(p, h));
    switch (wpl_type(p)) {
    case WplType::Domestic:
        return kind.tag == CurveKind::Tag::WplDomestic;
    case WplType::Tubular:
        return contains_dualizing(p, h) ? kind.tag == CurveKind::Tag::SmoothElliptic
                                        : kind.tag == CurveKind::Tag::WplTubular;
    case WplType::Wild:
        return kind.tag == CurveKind::Tag::WplWild ||
               kind.tag == CurveKind::Tag::WeightedElliptic ||
               kind.tag == CurveKind::Tag::HigherGenus;
    }
    return false;
}

} // namespace wpc

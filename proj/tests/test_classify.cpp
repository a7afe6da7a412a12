#include "doctest.h"
#include "wpc/classify.hpp"
#include "wpc/expr.hpp"

using namespace wpc;

TEST_CASE("euler characteristic values") {
    CHECK(euler_char(WeightType{{2, 3, 7}}) == Rational(-1, 42));
    CHECK(euler_char(WeightType{{2, 2, 2, 2}}) == Rational(0));
    CHECK(euler_char(WeightType{{2, 3, 5}}) == Rational(1, 30));
    CHECK(euler_char(WeightType{{2, 3, 6}}) == Rational(0));
    CHECK(euler_char(WeightType{}) == Rational(2));
    CHECK(euler_char(WeightType{{1, 1, 1}}) == Rational(2));
    CHECK(euler_char(WeightType{{7}}) == Rational(1) + Rational(1, 7));
}

TEST_CASE("type trichotomy by weight list") {
    auto type_of = [](std::vector<int> w) { return wpl_type(WeightType{std::move(w)}); };
    CHECK(type_of({}) == WplType::Domestic);
    CHECK(type_of({5}) == WplType::Domestic);
    CHECK(type_of({9, 4}) == WplType::Domestic);
    CHECK(type_of({2, 2, 12}) == WplType::Domestic);
    CHECK(type_of({2, 3, 3}) == WplType::Domestic);
    CHECK(type_of({2, 3, 4}) == WplType::Domestic);
    CHECK(type_of({2, 3, 5}) == WplType::Domestic);

    CHECK(type_of({2, 2, 2, 2}) == WplType::Tubular);
    CHECK(type_of({3, 3, 3}) == WplType::Tubular);
    CHECK(type_of({4, 4, 2}) == WplType::Tubular);
    CHECK(type_of({6, 3, 2}) == WplType::Tubular);
    CHECK(type_of({1, 2, 3, 6}) == WplType::Tubular);   // weight-one entries drop out

    CHECK(type_of({2, 3, 7}) == WplType::Wild);
    CHECK(type_of({2, 2, 2, 3}) == WplType::Wild);
    CHECK(type_of({5, 5, 5}) == WplType::Wild);
    CHECK(type_of({2, 2, 2, 2, 2}) == WplType::Wild);

    CHECK(wpl_type_name(WplType::Domestic) == std::string("domestic"));
    CHECK(wpl_type_name(WplType::Tubular) == std::string("tubular"));
    CHECK(wpl_type_name(WplType::Wild) == std::string("wild"));
}

TEST_CASE("curve kind of quotient data") {
    WeightType p{{2, 2, 2, 2}};
    Subgroup klein = subgroup_generate(
        p, {parse_element(p, "x1-x2"), parse_element(p, "x3-x4")});
    CurveKind elliptic = curve_kind(quotient_curve(p, klein));
    CHECK(elliptic.tag == CurveKind::Tag::SmoothElliptic);
    CHECK(elliptic.str() == "smooth_elliptic");

    Subgroup pair = subgroup_generate(p, {parse_element(p, "x1-x2")});
    CurveKind tub = curve_kind(quotient_curve(p, pair));
    CHECK(tub.tag == CurveKind::Tag::WplTubular);
    CHECK(tub.str() == "wpl_tubular");

    WeightType t{{2, 3, 4}};
    CurveKind dom = curve_kind(quotient_curve(
        t, subgroup_generate(t, {parse_element(t, "x1-2*x3")})));
    CHECK(dom.tag == CurveKind::Tag::WplDomestic);
    CHECK(dom.str() == "wpl_domestic");

    WeightType w{{3, 3, 6}};
    CurveKind we = curve_kind(quotient_curve(
        w, subgroup_generate(w, {parse_element(w, "x1+x2-4*x3")})));
    CHECK(we.tag == CurveKind::Tag::WeightedElliptic);
    CHECK(we.str() == "weighted_elliptic");

    WeightType s{{4, 6, 12}};
    CurveKind hg = curve_kind(quotient_curve(s, full_torsion_subgroup(s)));
    CHECK(hg.tag == CurveKind::Tag::HigherGenus);
    CHECK(hg.genus == 7);
    CHECK(hg.str() == "higher_genus:7");

    WeightType v{{5, 5, 5}};
    CurveKind wild = curve_kind(quotient_curve(v, subgroup_generate(v, {})));
    CHECK(wild.tag == CurveKind::Tag::WplWild);
    CHECK(wild.str() == "wpl_wild");
}

TEST_CASE("membership of the dualizing element") {
    WeightType p{{2, 2, 2, 2}};
    CHECK(contains_dualizing(p, full_torsion_subgroup(p)));
    CHECK(contains_dualizing(p, subgroup_generate(
        p, {parse_element(p, "x1-x2"), parse_element(p, "x3-x4")})));
    CHECK(!contains_dualizing(p, subgroup_generate(p, {parse_element(p, "x1-x2")})));
    CHECK(!contains_dualizing(p, subgroup_generate(p, {})));

    WeightType q{{2, 3, 7}};   // dualizing element has infinite order
    CHECK(!contains_dualizing(q, subgroup_generate(q, {})));
}

TEST_CASE("type is preserved or tamed along every quotient") {
    for (const WeightType& p : {WeightType{{2, 3, 4}}, WeightType{{2, 2, 2, 2}},
                                WeightType{{6, 3, 2}}, WeightType{{2, 2, 2, 2, 2}},
                                WeightType{{3, 3, 6}}}) {
        for (const Subgroup& h : enumerate_subgroups(p)) {
            CHECK(trichotomy_check(p, h));
            // and the cross-checked kind matches a recomputation by hand
            QuotientCurve q = quotient_curve(p, h);
            CurveKind k = curve_kind(q);
            if (q.genus == 0)
                CHECK((k.tag == CurveKind::Tag::WplDomestic ||
                       k.tag == CurveKind::Tag::WplTubular ||
                       k.tag == CurveKind::Tag::WplWild));
            if (q.genus == 1 && q.weights.empty())
                CHECK(k.tag == CurveKind::Tag::SmoothElliptic);
        }
    }
}

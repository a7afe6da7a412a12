#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wpc/expr.hpp"
#include "wpc/lgroup.hpp"

using namespace wpc;

namespace {

LElement rand_element(const WeightType& p, std::mt19937& rng) {
    std::vector<long long> a(p.weights.size());
    for (std::size_t i = 0; i < a.size(); i++)
        a[i] = static_cast<long long>(rng() % 41) - 20;
    return normal_form(p, a, static_cast<long long>(rng() % 11) - 5);
}

// Independent torsion enumeration: scan every normal-form coefficient tuple
// and keep those whose delta-value can be cancelled by an integer multiple
// of c. Never touches the closure machinery.
std::vector<LElement> torsion_by_scan(const WeightType& p) {
    mpz_class big = p.lcm();
    std::vector<LElement> out;
    std::vector<int> l(p.weights.size(), 0);
    while (true) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < l.size(); i++)
            s += (big / p.weights[i]) * l[i];
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), big.get_mpz_t());
        if (r == 0)
            out.push_back(LElement{l, -q.get_si()});
        std::size_t i = 0;
        for (; i < l.size(); i++) {
            if (++l[i] < p.weights[i])
                break;
            l[i] = 0;
        }
        if (i == l.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("normal form reduces coordinates with carries") {
    WeightType p{{2, 3, 4}};
    LElement e = normal_form(p, {5, -1, 9}, 0);
    CHECK(e.coeffs == std::vector<int>{1, 2, 1});
    CHECK(e.c_coeff == 2 + (-1) + 2);
    CHECK(normal_form(p, {0, 0, 0}, 3) == LElement{{0, 0, 0}, 3});
    CHECK(normal_form(WeightType{}, {}, -2) == LElement{{}, -2});
}

TEST_CASE("group laws hold on random elements") {
    std::mt19937 rng(4242);
    for (const WeightType& p : {WeightType{{2, 3, 4}}, WeightType{{6, 3, 2}},
                                WeightType{{5, 5, 5, 5}}, WeightType{{1, 7, 2}}}) {
        LElement zero = lel_zero(p);
        for (int i = 0; i < 60; i++) {
            LElement x = rand_element(p, rng);
            LElement y = rand_element(p, rng);
            LElement z = rand_element(p, rng);
            CHECK(lel_add(p, x, y) == lel_add(p, y, x));
            CHECK(lel_add(p, lel_add(p, x, y), z) == lel_add(p, x, lel_add(p, y, z)));
            CHECK(lel_add(p, x, lel_neg(p, x)) == zero);
            CHECK(lel_sub(p, x, y) == lel_add(p, x, lel_neg(p, y)));
            CHECK(lel_scale(p, 3, x) == lel_add(p, x, lel_add(p, x, x)));
            CHECK(lel_scale(p, -1, x) == lel_neg(p, x));
            // delta is a homomorphism
            CHECK(delta(p, lel_add(p, x, y)) == delta(p, x) + delta(p, y));
        }
        // p_i x_i = c for every i
        for (int i = 1; i <= p.count(); i++)
            CHECK(lel_scale(p, p.weights[static_cast<std::size_t>(i - 1)],
                            lel_basis(p, i)) == lel_c(p));
    }
}

TEST_CASE("degree values of the distinguished elements") {
    WeightType p{{2, 3, 4}};
    CHECK(p.lcm() == 12);
    CHECK(delta(p, lel_basis(p, 1)) == 6);
    CHECK(delta(p, lel_basis(p, 2)) == 4);
    CHECK(delta(p, lel_basis(p, 3)) == 3);
    CHECK(delta(p, lel_c(p)) == 12);
    CHECK_THROWS_AS(lel_basis(p, 4), Error);
    CHECK_THROWS_AS(lel_basis(p, 0), Error);
}

TEST_CASE("dualizing element normal forms") {
    auto omega_of = [](std::vector<int> w) {
        WeightType p{std::move(w)};
        return dualizing_element(p);
    };
    CHECK(omega_of({2, 2, 2, 2}) == LElement{{1, 1, 1, 1}, -2});
    CHECK(omega_of({4, 4, 2}) == LElement{{3, 3, 1}, -2});
    CHECK(omega_of({6, 3, 2}) == LElement{{5, 2, 1}, -2});
    CHECK(omega_of({3, 3, 3}) == LElement{{2, 2, 2}, -2});
    CHECK(omega_of({2, 3, 7}) == LElement{{1, 2, 6}, -2});

    WeightType p{{2, 3, 7}};
    CHECK(delta(p, dualizing_element(p)) == 1);    // negative Euler characteristic
    CHECK(!element_order(p, dualizing_element(p)).has_value());
}

TEST_CASE("element orders on and off the torsion subgroup") {
    WeightType p{{4, 4, 2}};
    CHECK(element_order(p, lel_zero(p)) == mpz_class(1));
    CHECK(element_order(p, dualizing_element(p)) == mpz_class(4));
    CHECK(element_order(p, parse_element(p, "x1-x2")) == mpz_class(4));
    CHECK(element_order(p, parse_element(p, "2*x1-x3")) == mpz_class(2));
    CHECK(!element_order(p, lel_basis(p, 1)).has_value());
    CHECK(!element_order(p, lel_c(p)).has_value());

    WeightType q{{6, 3, 2}};
    CHECK(element_order(q, dualizing_element(q)) == mpz_class(6));
    CHECK(element_order(q, lel_scale(q, 2, dualizing_element(q))) == mpz_class(3));
    CHECK(element_order(q, lel_scale(q, 3, dualizing_element(q))) == mpz_class(2));
}

TEST_CASE("torsion closure agrees with the coefficient-tuple scan") {
    for (const WeightType& p :
         {WeightType{{2, 3, 4}}, WeightType{{2, 2, 2, 2}}, WeightType{{4, 4, 2}},
          WeightType{{6, 3, 2}}, WeightType{{3, 3, 3}}, WeightType{{2, 4, 6}},
          WeightType{{4, 6, 12}}, WeightType{{8, 8}}, WeightType{{5}}, WeightType{},
          WeightType{{1, 6, 4}}}) {
        std::vector<LElement> closure = torsion_elements(p);
        CHECK(closure == torsion_by_scan(p));
        CHECK(mpz_class(static_cast<long>(closure.size())) == p.torsion_order());
        for (const LElement& e : closure) {
            CHECK(is_torsion(p, e));
            CHECK(delta(p, e) == 0);
        }
        for (const LElement& g : torsion_generators(p))
            CHECK(is_torsion(p, g));
    }
}

TEST_CASE("torsion materialization respects the bound") {
    CHECK_THROWS_AS(torsion_elements(WeightType{{2, 2, 2, 2}}, 4), Error);
    try {
        torsion_elements(WeightType{{2, 2, 2, 2}}, 4);
    } catch (const Error& e) {
        CHECK(e.code() == "torsion_too_large");
    }
    CHECK(torsion_elements(WeightType{{2, 2, 2, 2}}, 8).size() == 8);
}

TEST_CASE("subgroup generation rejects infinite-order generators") {
    WeightType p{{2, 3, 4}};
    CHECK_THROWS_AS(subgroup_generate(p, {lel_basis(p, 1)}), Error);
    CHECK_THROWS_AS(subgroup_generate(p, {lel_c(p)}), Error);
    Subgroup trivial = subgroup_generate(p, {});
    CHECK(trivial.order() == 1);
    CHECK(subgroup_contains(trivial, lel_zero(p)));
    CHECK(!subgroup_contains(trivial, parse_element(p, "x1-2*x3")));
}

TEST_CASE("subgroup enumeration matches brute-force subset closure") {
    for (const WeightType& p : {WeightType{{2, 2, 2, 2}}, WeightType{{2, 4, 6}},
                                WeightType{{3, 3, 3}}, WeightType{{2, 3, 4}},
                                WeightType{{4, 4, 2}}}) {
        std::vector<LElement> torsion = torsion_elements(p);
        std::set<std::vector<LElement>> expected;
        std::size_t n = torsion.size();
        REQUIRE(n <= 16);
        for (std::size_t mask = 0; mask < (1u << n); mask++) {
            std::vector<LElement> gens;
            for (std::size_t i = 0; i < n; i++)
                if (mask & (1u << i))
                    gens.push_back(torsion[i]);
            expected.insert(subgroup_generate(p, gens).elements);
        }
        std::vector<Subgroup> got = enumerate_subgroups(p);
        CHECK(got.size() == expected.size());
        for (const Subgroup& h : got)
            CHECK(expected.count(h.elements) == 1);
        // sorted by (order, elements), and every listed element set is closed
        for (std::size_t i = 1; i < got.size(); i++) {
            bool ordered = got[i - 1].order() < got[i].order() ||
                           (got[i - 1].order() == got[i].order() &&
                            got[i - 1].elements < got[i].elements);
            CHECK(ordered);
        }
    }
    CHECK(enumerate_subgroups(WeightType{{2, 2, 2, 2}}).size() == 16);
    CHECK(enumerate_subgroups(WeightType{{3, 3, 3}}).size() == 6);
}

TEST_CASE("canonical keys identify subgroups up to weight-preserving relabeling") {
    WeightType p{{2, 2, 6}};
    auto key = [&](const char* gens) {
        return permutation_canonical(p, subgroup_generate(p, {parse_element(p, gens)}));
    };
    CHECK(key("x1-3*x3") == key("x2-3*x3"));      // the two weight-2 spots swap
    CHECK(key("x1-3*x3") != key("x1-x2"));

    WeightType q{{2, 2, 2}};
    auto keyq = [&](const char* gens) {
        return permutation_canonical(q, subgroup_generate(q, {parse_element(q, gens)}));
    };
    CHECK(keyq("x1-x2") == keyq("x2-x3"));
    CHECK(keyq("x1-x2") == keyq("x1-x3"));

    // key ignores the generating set, not just the labels
    WeightType r{{4, 4, 2}};
    Subgroup a = subgroup_generate(r, {parse_element(r, "x1-x2")});
    Subgroup b = subgroup_generate(
        r, {parse_element(r, "2*x1-2*x2"), parse_element(r, "3*x1-3*x2")});
    CHECK(a.elements == b.elements);
    CHECK(permutation_canonical(r, a) == permutation_canonical(r, b));

    // keys of different weight types never collide
    CHECK(permutation_canonical(p, subgroup_generate(p, {})).weights ==
          std::vector<int>{2, 2, 6});
}

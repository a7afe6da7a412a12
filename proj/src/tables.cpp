#include "wpc/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <string_view>
#include <thread>
#include <utility>

namespace wpc {

namespace {

TableRow make_row(const WeightType& p, Subgroup h,
                  std::optional<TubularTransform> tr = std::nullopt,
                  std::optional<ParamOrbit> orbit = std::nullopt) {
    TableRow r;
    r.weights = p;
    r.key = permutation_canonical(p, h);
    r.quotient = quotient_curve(p, h);
    r.kind = curve_kind(r.quotient);
    r.subgroup = std::move(h);
    r.transform = tr;
    r.param = std::move(orbit);
    if (!trichotomy_check(r.weights, r.subgroup))
        throw internal_check("trichotomy violated at " + r.weights.str());
    return r;
}

bool row_less(const TableRow& a, const TableRow& b) {
    std::vector<int> wa = a.weights.weights;
    std::vector<int> wb = b.weights.weights;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    if (wa != wb)
        return wa < wb;
    if (a.subgroup.order() != b.subgroup.order())
        return a.subgroup.order() < b.subgroup.order();
    if (a.key != b.key)
        return a.key < b.key;
    return a.subgroup.elements < b.subgroup.elements;
}

// Keep one row per permutation class. Input order decides the surviving
// representative, so feed rows in a deterministic order.
std::vector<TableRow> dedupe_rows(std::vector<TableRow> rows) {
    std::set<SubgroupKey> seen;
    std::vector<TableRow> out;
    for (TableRow& r : rows)
        if (seen.insert(r.key).second)
            out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), row_less);
    return out;
}

bool parallel_allowed() {
    if (const char* e = std::getenv("WPC_NO_PARALLEL"))
        if (*e && std::string_view(e) != "0")
            return false;
    return std::thread::hardware_concurrency() > 1;
}

// Apply f to every candidate, sharded over worker threads when allowed.
// Results keep candidate order, so parallelism never changes output.
template <class T, class F>
std::vector<std::vector<TableRow>> map_candidates(const std::vector<T>& cands, F f) {
    std::vector<std::vector<TableRow>> out(cands.size());
    std::size_t nt = std::min<std::size_t>(std::thread::hardware_concurrency(),
                                           cands.size());
    if (!parallel_allowed() || nt < 2) {
        for (std::size_t i = 0; i < cands.size(); i++)
            out[i] = f(cands[i]);
        return out;
    }
    std::vector<std::exception_ptr> errs(nt);
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (std::size_t t = 0; t < nt; t++)
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < cands.size(); i += nt)
                    out[i] = f(cands[i]);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (std::thread& w : workers)
        w.join();
    for (std::exception_ptr& e : errs)
        if (e)
            std::rethrow_exception(e);
    return out;
}

}  // namespace

std::vector<TableRow> table_domestic(int n_max, int p_max) {
    if (n_max < 1 || p_max < 1)
        throw invalid_action("table bounds must be >= 1");
    std::set<std::vector<int>> types;
    types.insert({2, 3, 3});
    types.insert({2, 3, 4});
    types.insert({2, 3, 5});
    for (int m = 2; m <= 2 * n_max; m++)
        types.insert({2, 2, m});
    for (int n = 2; n <= n_max; n++)
        for (int p1 = 1; p1 <= p_max; p1++)
            for (int p2 = p1; p2 <= p_max; p2++)
                if (std::gcd(p1, p2) == 1)
                    types.insert({n * p1, n * p2});

    std::vector<TableRow> rows;
    for (const std::vector<int>& w : types) {
        WeightType p{w};
        for (Subgroup& h : enumerate_subgroups(p))
            if (h.order() > 1)
                rows.push_back(make_row(p, std::move(h)));
    }
    return dedupe_rows(std::move(rows));
}

namespace {

// Which parameter transform a subgroup of the 4-point tubular type carries:
// the six index-pair subgroups move the parameter into a quadratic extension
// determined by which pair collapses; everything else (the dualizing
// element, the Klein subgroups, the full torsion group) keeps the parameter
// up to its anharmonic orbit.
TubularTransform four_point_transform(const Subgroup& h) {
    if (h.order() != 2)
        return TubularTransform::GammaLambda;
    const LElement& e = h.elements[1];
    std::vector<int> sup;
    for (int i = 0; i < 4; i++)
        if (e.coeffs[static_cast<std::size_t>(i)] != 0)
            sup.push_back(i);
    if (sup.size() != 2)
        return TubularTransform::GammaLambda;   // the dualizing element
    if (sup == std::vector<int>{0, 1} || sup == std::vector<int>{2, 3})
        return TubularTransform::Pair12_34;
    if (sup == std::vector<int>{0, 2} || sup == std::vector<int>{1, 3})
        return TubularTransform::Pair13_24;
    return TubularTransform::Pair14_23;
}

}  // namespace

std::vector<TableRow> table_tubular() {
    struct TypeSpec {
        std::vector<int> weights;
        std::size_t nontrivial;          // exhaustiveness check
        std::optional<ParamOrbit> orbit; // fixed orbit where the quotient has a modulus
    };
    const std::vector<TypeSpec> specs = {
        {{2, 2, 2, 2}, 15, std::nullopt},
        {{4, 4, 2}, 7, gamma_orbit(Rational(-1))},
        {{6, 3, 2}, 3, gamma_orbit(omega_parameter())},
        {{3, 3, 3}, 5, gamma_orbit(omega_parameter())},
    };

    std::vector<TableRow> rows;
    for (const TypeSpec& spec : specs) {
        WeightType p{spec.weights};
        std::size_t found = 0;
        for (Subgroup& h : enumerate_subgroups(p)) {
            if (h.order() <= 1)
                continue;
            found++;
            if (p.count() == 4) {
                TubularTransform tr = four_point_transform(h);
                rows.push_back(make_row(p, std::move(h), tr));
                continue;
            }
            TableRow r = make_row(p, std::move(h));
            bool has_modulus = r.quotient.weights.size() == 4 ||
                               r.kind.tag == CurveKind::Tag::SmoothElliptic;
            if (has_modulus)
                r.param = spec.orbit;
            rows.push_back(std::move(r));
        }
        if (found != spec.nontrivial)
            throw internal_check("unexpected subgroup census at " + p.str());
    }
    std::sort(rows.begin(), rows.end(), row_less);
    return rows;
}

namespace {

struct GenusCandidate {
    WeightType p;
    long long n;   // the forced subgroup order
};

// Depth-first generation of nondecreasing weight tuples satisfying
//   t - 2 = sum 1/p_i + 2(g-1)/n  with n a positive integer, n >= p_t.
// `rem` carries t - 2 - sum of the chosen 1/p_i; it must stay positive
// because every remaining term is strictly positive. The bound
//   p_{j+1} <= (t - j + 2(g-1)) / rem
// is exact (each of the t-j remaining 1/p_i and the 2(g-1)/n <= 2(g-1)/p
// term is at most 1/p_{j+1}-scaled); slack widens it only to let the
// stability check demonstrate nothing new appears.
void extend_candidates(std::vector<int>& prefix, const Rational& rem, int t,
                       long long g, int slack, std::vector<GenusCandidate>& out) {
    if (!(rem > Rational(0)))
        return;
    int j = static_cast<int>(prefix.size());
    if (j == t) {
        Rational n_rat = Rational(static_cast<long>(2 * (g - 1))) / rem;
        if (!n_rat.is_integer())
            return;
        mpz_class nz = n_rat.num();
        if (!nz.fits_slong_p())
            return;   // cannot divide the (materializable) torsion order
        long long n = nz.get_si();
        if (n < prefix.back())
            return;   // a smooth subgroup surjects onto Z/p_t
        WeightType p{prefix};
        if (p.torsion_order() % nz != 0)
            return;
        if (!exists_smooth_subgroup(p).first)
            return;
        out.push_back({std::move(p), n});
        return;
    }
    int lo = prefix.empty() ? 2 : prefix.back();
    Rational cap = Rational(static_cast<long>(t - j + 2 * (g - 1))) / rem;
    mpz_class capz = cap.floor() + slack;
    if (!capz.fits_sint_p())
        throw invalid_action("genus too large for this search");
    int hi = static_cast<int>(capz.get_si());
    for (int q = lo; q <= hi; q++) {
        prefix.push_back(q);
        extend_candidates(prefix, rem - Rational(1, q), t, g, slack, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<TableRow> search_genus(long long genus, int slack) {
    if (genus < 2)
        throw invalid_action("smooth-quotient search needs genus >= 2");
    if (slack < 0)
        throw invalid_action("slack must be >= 0");

    // From t - 2 <= t/2 + (g - 1): at most 2g + 2 marked points.
    std::vector<GenusCandidate> cands;
    int t_hi = static_cast<int>(2 * genus + 2) + slack;
    for (int t = 3; t <= t_hi; t++) {
        std::vector<int> prefix;
        extend_candidates(prefix, Rational(static_cast<long>(t - 2)), t, genus,
                          slack, cands);
    }

    auto rows_for = [&](const GenusCandidate& cand) {
        std::vector<TableRow> rows;
        for (Subgroup& h : enumerate_subgroups(cand.p)) {
            if (h.order() != cand.n || !is_smooth_quotient(cand.p, h))
                continue;
            TableRow r = make_row(cand.p, std::move(h));
            if (r.quotient.genus != genus)
                throw internal_check("order-matched smooth subgroup with wrong genus at " +
                                     cand.p.str());
            rows.push_back(std::move(r));
        }
        return rows;
    };

    std::vector<TableRow> rows;
    for (std::vector<TableRow>& part : map_candidates(cands, rows_for))
        for (TableRow& r : part)
            rows.push_back(std::move(r));
    return dedupe_rows(std::move(rows));
}

std::vector<TableRow> table_genus2(int slack) {
    return search_genus(2, slack);
}

const std::vector<WeightType>& arnold_triples() {
    static const std::vector<WeightType> triples = {
        WeightType{{2, 3, 7}}, WeightType{{2, 3, 8}}, WeightType{{2, 3, 9}},
        WeightType{{2, 4, 5}}, WeightType{{2, 4, 6}}, WeightType{{2, 4, 7}},
        WeightType{{2, 5, 5}}, WeightType{{2, 5, 6}}, WeightType{{3, 3, 4}},
        WeightType{{3, 3, 5}}, WeightType{{3, 3, 6}}, WeightType{{3, 4, 4}},
        WeightType{{3, 4, 5}}, WeightType{{4, 4, 4}},
    };
    return triples;
}

std::vector<TableRow> table_arnold() {
    std::vector<TableRow> rows;
    for (const WeightType& p : arnold_triples())
        for (Subgroup& h : enumerate_subgroups(p))
            if (h.order() > 1)
                rows.push_back(make_row(p, std::move(h)));
    return dedupe_rows(std::move(rows));
}

}  // namespace wpc

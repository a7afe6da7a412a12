#ifndef WPC_TABLES_HPP
#define WPC_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "wpc/classify.hpp"
#include "wpc/lgroup.hpp"
#include "wpc/params.hpp"
#include "wpc/quotient.hpp"

namespace wpc {

// One classified pair (p, H) with its quotient data. `key` identifies the
// pair up to weight-preserving index permutations; tables that list pairs up
// to that relation dedupe on it. Tubular rows additionally carry which
// parameter transform applies and, when the orbit does not depend on a free
// parameter, the orbit itself.
struct TableRow {
    WeightType weights;
    Subgroup subgroup;
    SubgroupKey key;
    QuotientCurve quotient;
    CurveKind kind;
    std::optional<TubularTransform> transform;
    std::optional<ParamOrbit> param;
};

// Rows are always sorted by (weights, subgroup order, key) so output is
// reproducible run to run; searches may shard over candidate weight tuples
// in worker threads (set WPC_NO_PARALLEL=1 to force sequential execution)
// and the sort makes the merge order immaterial.

// All nontrivial subgroups of the domestic weight types, one row per
// permutation class. Families instantiated: the exceptional triples (2,3,3),
// (2,3,4), (2,3,5); the triples (2,2,m) for m <= 2*n_max; and the two-point
// types (n p1, n p2) for n <= n_max and coprime p1 <= p2 <= p_max.
std::vector<TableRow> table_domestic(int n_max = 6, int p_max = 3);

// All nontrivial subgroups of the four tubular weight types. No permutation
// dedup here: permutation-isomorphic subgroups of (2,2,2,2) carry different
// parameter transforms, so every subgroup gets its own row.
std::vector<TableRow> table_tubular();

// Exhaustive search for pairs (p, H) with smooth quotient of genus 2, up to
// permutation classes. `slack` widens every derived search bound by that
// amount (the census must be stable under widening). All bounds come from
// exact rational arithmetic on t - 2 = sum 1/p_i + 2(g-1)/n with n >= p_t.
std::vector<TableRow> table_genus2(int slack = 0);

// Same search at an arbitrary genus g >= 2 (unvalidated beyond g = 2).
std::vector<TableRow> search_genus(long long genus, int slack = 0);

// All nontrivial subgroups, up to permutation classes, of the fourteen
// weight triples attached to Arnold's exceptional unimodal singularities.
std::vector<TableRow> table_arnold();

// The fourteen triples, in the conventional order.
const std::vector<WeightType>& arnold_triples();

} // namespace wpc

#endif

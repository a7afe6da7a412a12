#ifndef WPC_SERIALIZE_HPP
#define WPC_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "wpc/classify.hpp"
#include "wpc/lgroup.hpp"
#include "wpc/params.hpp"
#include "wpc/quadext.hpp"
#include "wpc/quotient.hpp"
#include "wpc/rational.hpp"
#include "wpc/tables.hpp"
#include "wpc/tube.hpp"

namespace wpc {

using json = nlohmann::json;

// Exactness rule: arbitrary-precision integers become JSON numbers when they
// fit in 64 bits and decimal strings otherwise; rationals are always literal
// strings ("5/4", "9") so no consumer ever sees a rounded value.
json json_int(const mpz_class& z);
json json_rational(const Rational& r);

// Rational-valued elements collapse to the rational literal; genuine
// quadratic elements carry their coordinates and presentation.
json json_quad(const QuadExtElem& x);

json json_weights(const WeightType& p);
json json_subgroup(const WeightType& p, const Subgroup& h);
json json_quotient(const QuotientCurve& q);
json json_kind(const CurveKind& k);
json json_param_orbit(const ParamOrbit& o);
json json_tubes(const TubeDecomposition& d);
json json_row(const TableRow& row);
json json_rows(const std::vector<TableRow>& rows);

// GitHub-style table with columns Weights | Subgroup | Quotient | Genus |
// Class | Parameter.
std::string markdown_table(const std::vector<TableRow>& rows);

} // namespace wpc

#endif

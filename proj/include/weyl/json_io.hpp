#pragma once

#include "json.hpp"
#include "weyl/bipoly.hpp"
#include "weyl/psido.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Key order is fixed at insertion, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Integers as decimal strings to keep arbitrary precision intact.
Json json_rational(const Rational& r);
/// Ascending parameter degree, one [numerator, denominator] pair each.
Json json_param_poly(const ParamPoly& c);
/// {"terms": [{"i", "j", "coeff"}...]} ascending in (i, j).
Json json_weyl(const WeylOp& p);
Json json_bipoly(const BiPoly& f);
Json json_xseries(const XSeries& u);
/// {"floor": j|null, "terms": [{"j", "coeff"}...]} ascending in j.
Json json_psido(const PsiDO& a);

} // namespace weyl

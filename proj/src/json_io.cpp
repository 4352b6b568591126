#include "weyl/json_io.hpp"

namespace weyl {

Json json_rational(const Rational& r) {
    return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Json json_param_poly(const ParamPoly& c) {
    Json arr = Json::array();
    for (long k = 0; k <= c.degree(); ++k) arr.push_back(json_rational(c.coeff(k)));
    return arr;
}

Json json_weyl(const WeylOp& p) {
    Json terms = Json::array();
    for (const auto& [mon, c] : p.terms())
        terms.push_back({{"i", mon.i}, {"j", mon.j}, {"coeff", json_param_poly(c)}});
    return {{"terms", terms}};
}

Json json_bipoly(const BiPoly& f) {
    Json terms = Json::array();
    for (const auto& [mon, c] : f.terms())
        terms.push_back({{"i", mon.i}, {"j", mon.j}, {"coeff", json_param_poly(c)}});
    return {{"terms", terms}};
}

Json json_xseries(const XSeries& u) {
    Json coeffs = Json::array();
    for (long k = 0; k < u.trunc(); ++k) coeffs.push_back(json_param_poly(u.coeff(k)));
    return {{"trunc", u.trunc()}, {"coeffs", coeffs}};
}

Json json_psido(const PsiDO& a) {
    Json terms = Json::array();
    for (const auto& [j, u] : a.terms())
        terms.push_back({{"j", j}, {"coeff", json_xseries(u)}});
    Json out;
    if (a.floor() == kNegInf)
        out["floor"] = nullptr;
    else
        out["floor"] = a.floor();
    out["terms"] = terms;
    return out;
}

} // namespace weyl

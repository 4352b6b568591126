#pragma once

#include <string>

#include "weyl/bipoly.hpp"
#include "weyl/psido.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Syntax failure with the 1-based input position of the offending token.
class ParseError : public domain_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : domain_error("syntax", msg + " at position " + std::to_string(pos)), pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

/// Operator expressions over +, -, *, ^ with atoms x, D, a, rational
/// literals (p or p/q) and parentheses. Unary minus binds below ^, so
/// -x^2 reads as -(x^2); exponents are literal nonnegative integers.
WeylOp parse_operator(const std::string& text);

/// Canonical text form, terms descending in (D-exponent, x-exponent);
/// parse_operator(render_operator(p)) == p.
std::string render_operator(const WeylOp& p);

/// Commutative rendering; uppercase selects X/Y over x/y.
std::string render_bipoly(const BiPoly& f, bool uppercase = false);

std::string render_xseries(const XSeries& u);

/// Orders descending; D^j for positive, Dinv^k for order -k.
std::string render_psido(const PsiDO& a);

} // namespace weyl

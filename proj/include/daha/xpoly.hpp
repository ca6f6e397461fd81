#pragma once

#include "daha/qt.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Laurent polynomial in X_b (b in the configured lattice) with QTRat
// coefficients; X_{[b,j]} = X_b q^j is folded into the coefficient.
class XPoly {
 public:
  std::map<Weight, QTRat> terms;

  XPoly() = default;
  static XPoly zero() { return XPoly(); }
  static XPoly constant(const QTRat& c) {
    XPoly p;
    if (!c.is_zero()) p.terms[Weight{}] = c;  // adjusted by callers with rank
    return p;
  }
  static XPoly monomial(const Weight& b, const QTRat& c = QTRat::one()) {
    XPoly p;
    if (!c.is_zero()) p.terms[b] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  void add_term(const Weight& b, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) { terms.emplace(b, c); return; }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly scale(const QTRat& c) const;
  XPoly mul_monomial(const Weight& b, const QTRat& c) const;
  bool equals(const XPoly& o) const;

  QTRat coeff(const Weight& b) const {
    auto it = terms.find(b);
    return it == terms.end() ? QTRat() : it->second;
  }
  std::string json() const;
};

// Evaluation point of the form q^{b + s * u^{-1}(rho_k)}, s = +-1:
// X_a evaluates to q^{(a,b)} prod_nu t_nu^{s (u(a), rho_nu^vee)}.
// The point q^{c_#} is (b = c, u = u_c, s = -1); q^{-rho_k} is (0, id, -1).
struct CharPoint {
  Weight b;
  IMat u;
  int rho_sign = -1;

  static CharPoint principal(const RootDatum& rd);       // q^{-rho_k}
  static CharPoint rho_k(const RootDatum& rd);           // q^{+rho_k}
  static CharPoint sharp(const RootDatum& rd, const Weight& c);  // q^{c_#}

  QTMono value(const RootDatum& rd, const Weight& a) const;
};

QTRat evaluate_x(const RootDatum& rd, const XPoly& f, const CharPoint& p);

// Action of an extended Weyl group element on X-monomials, extended
// linearly; pi_r and the s_i X-actions are special cases.
XPoly act_on_xpoly(const RootDatum& rd, const AffineElem& e, const XPoly& f);

// Exact division of f by (q^{qshift} X_v - 1); throws when not divisible.
XPoly divide_by_xbinomial(const RootDatum& rd, const XPoly& f, const Weight& v,
                          const Frac& qshift);

}  // namespace daha

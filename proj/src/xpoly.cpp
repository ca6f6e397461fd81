#include "daha/xpoly.hpp"

#include <algorithm>
#include <sstream>

namespace daha {

XPoly XPoly::operator+(const XPoly& o) const {
  XPoly r = *this;
  for (auto& [b, c] : o.terms) r.add_term(b, c);
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
  XPoly r = *this;
  for (auto& [b, c] : o.terms) r.add_term(b, -c);
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  XPoly r;
  for (auto& [b1, c1] : terms)
    for (auto& [b2, c2] : o.terms) r.add_term(ivec_add(b1, b2), c1 * c2);
  return r;
}

XPoly XPoly::scale(const QTRat& c) const {
  XPoly r;
  if (c.is_zero()) return r;
  for (auto& [b, c1] : terms) r.add_term(b, c1 * c);
  return r;
}

XPoly XPoly::mul_monomial(const Weight& b, const QTRat& c) const {
  XPoly r;
  if (c.is_zero()) return r;
  for (auto& [b1, c1] : terms) r.add_term(ivec_add(b1, b), c1 * c);
  return r;
}

bool XPoly::equals(const XPoly& o) const {
  if (terms.size() != o.terms.size()) return false;
  auto it = terms.begin();
  auto jt = o.terms.begin();
  for (; it != terms.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!it->second.equals(jt->second)) return false;
  }
  return true;
}

std::string XPoly::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto& [b, c] : terms) {
    if (!first) os << ",";
    first = false;
    os << "{\"weight\":[";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "],\"coeff\":" << c.json() << "}";
  }
  os << "]";
  return os.str();
}

CharPoint CharPoint::principal(const RootDatum& rd) {
  return CharPoint{Weight(rd.rank(), 0), imat_identity(rd.rank()), -1};
}

CharPoint CharPoint::rho_k(const RootDatum& rd) {
  return CharPoint{Weight(rd.rank(), 0), imat_identity(rd.rank()), +1};
}

CharPoint CharPoint::sharp(const RootDatum& rd, const Weight& c) {
  auto red = reduce_mod_w(rd, c);
  return CharPoint{c, red.u, -1};
}

QTMono CharPoint::value(const RootDatum& rd, const Weight& a) const {
  QTMono m;
  m.qe = rd.pairing(a, b);
  Weight ua = imat_apply(u, a);
  m.tse = rd.pairing(ua, rd.rho_nu(1)) * Frac(rho_sign);
  if (!rd.simply_laced())
    m.tle = rd.pairing(ua, rd.rho_nu(rd.nu_lng())) * Frac(rho_sign, rd.nu_lng());
  return m;
}

QTRat evaluate_x(const RootDatum& rd, const XPoly& f, const CharPoint& p) {
  QTRat r;
  for (auto& [b, c] : f.terms) r += c * QTRat::monomial(p.value(rd, b));
  return r;
}

XPoly act_on_xpoly(const RootDatum& rd, const AffineElem& e, const XPoly& f) {
  XPoly r;
  for (auto& [b, c] : f.terms) {
    auto [nb, qshift] = e.act_xweight(rd, b, Frac(0));
    r.add_term(nb, c * QTRat::monomial(QTMono{qshift, Frac(0), Frac(0)}));
  }
  return r;
}

XPoly divide_by_xbinomial(const RootDatum& rd, const XPoly& f, const Weight& v,
                          const Frac& qshift) {
  // g = (q^{qshift} X_v - 1) h: repeatedly peel the monomial maximizing
  // (u, v) (Gram pairing), tie-broken lexicographically; it must come from
  // q^{qshift} X_v * (top of h).
  XPoly g = f, h;
  QTMono qm{qshift, Frac(0), Frac(0)};
  size_t guard = 16 * (f.terms.size() + 4) * (f.terms.size() + 4) + 256;
  while (!g.terms.empty()) {
    if (guard-- == 0)
      throw std::logic_error("divide_by_xbinomial: not divisible");
    auto best = g.terms.begin();
    Frac bestv = rd.pairing(best->first, v);
    for (auto it = std::next(g.terms.begin()); it != g.terms.end(); ++it) {
      Frac val = rd.pairing(it->first, v);
      if (val > bestv || (val == bestv && it->first > best->first)) {
        best = it;
        bestv = val;
      }
    }
    Weight hb = ivec_sub(best->first, v);
    QTRat hc = best->second * QTRat::monomial(qm.inv());
    h.add_term(hb, hc);
    // g -= (q^{qshift} X_v - 1) * hc X_hb
    g.add_term(best->first, -(hc * QTRat::monomial(qm)));
    g.add_term(hb, hc);
  }
  return h;
}

}  // namespace daha

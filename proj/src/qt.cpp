#include "daha/qt.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace daha {

QTPoly QTPoly::operator+(const QTPoly& o) const {
  QTPoly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
  QTPoly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

QTPoly QTPoly::operator-() const {
  QTPoly r;
  for (auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
  QTPoly r;
  for (auto& [m1, c1] : terms)
    for (auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
  return r;
}

QTPoly QTPoly::mul_mono(const QTMono& m, const Rat& c) const {
  QTPoly r;
  if (c == 0) return r;
  for (auto& [m1, c1] : terms) r.terms.emplace(m1 * m, c1 * c);
  return r;
}

bool operator<(const QTPoly& a, const QTPoly& b) {
  return std::lexicographical_compare(
      a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
      [](const std::pair<const QTMono, Rat>& x,
         const std::pair<const QTMono, Rat>& y) {
        if (!(x.first == y.first)) return x.first < y.first;
        return x.second < y.second;
      });
}

QTPoly QTPoly::specialize(const Frac& ks, const Frac& kl, long long nu_lng,
                          int sgn_s, int sgn_l) const {
  QTPoly r;
  for (auto& [m, c] : terms) {
    Rat cc = c;
    if (sgn_s < 0) {
      if (!m.tse.is_integer())
        throw std::domain_error("specialize: half-integral t_sht power of -1");
      if (m.tse.num % 2 != 0) cc = -cc;
    }
    if (sgn_l < 0) {
      if (!m.tle.is_integer())
        throw std::domain_error("specialize: half-integral t_lng power of -1");
      if (m.tle.num % 2 != 0) cc = -cc;
    }
    QTMono nm{m.qe + m.tse * ks + m.tle * Frac(nu_lng) * kl, Frac(0), Frac(0)};
    r.add_term(nm, cc);
  }
  return r;
}

QTPoly QTPoly::shift_t(long long shift, long long nu_lng) const {
  QTPoly r;
  for (auto& [m, c] : terms) {
    QTMono nm{m.qe + m.tse * Frac(shift) + m.tle * Frac(nu_lng * shift),
              m.tse, m.tle};
    r.add_term(nm, c);
  }
  return r;
}

QTPoly QTPoly::truncate_q(const Frac& qmax) const {
  QTPoly r;
  for (auto& [m, c] : terms)
    if (m.qe <= qmax) r.terms.emplace(m, c);
  return r;
}

std::string QTPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (!m.qe.is_zero()) os << "*q^(" << m.qe.str() << ")";
    if (!m.tse.is_zero()) os << "*ts^(" << m.tse.str() << ")";
    if (!m.tle.is_zero()) os << "*tl^(" << m.tle.str() << ")";
  }
  return os.str();
}

namespace {

// integer-exponent image of a polynomial (scaled, shifted to min 0)
struct IntPoly {
  std::map<std::array<long long, 3>, Rat> terms;
};

long long lcm3(long long a, long long b) { return std::lcm(a, b); }

void scaling_of(const QTPoly& p, long long s[3]) {
  for (auto& [m, c] : p.terms) {
    (void)c;
    s[0] = lcm3(s[0], m.qe.den);
    s[1] = lcm3(s[1], m.tse.den);
    s[2] = lcm3(s[2], m.tle.den);
  }
}

IntPoly to_int(const QTPoly& p, const long long s[3], long long off[3]) {
  IntPoly r;
  bool first = true;
  long long mn[3] = {0, 0, 0};
  for (auto& [m, c] : p.terms) {
    (void)c;
    long long e[3] = {m.qe.num * (s[0] / m.qe.den),
                      m.tse.num * (s[1] / m.tse.den),
                      m.tle.num * (s[2] / m.tle.den)};
    for (int i = 0; i < 3; ++i)
      mn[i] = first ? e[i] : std::min(mn[i], e[i]);
    first = false;
  }
  for (int i = 0; i < 3; ++i) off[i] = mn[i];
  for (auto& [m, c] : p.terms) {
    std::array<long long, 3> e{m.qe.num * (s[0] / m.qe.den) - mn[0],
                               m.tse.num * (s[1] / m.tse.den) - mn[1],
                               m.tle.num * (s[2] / m.tle.den) - mn[2]};
    r.terms.emplace(e, c);
  }
  return r;
}

}  // namespace

bool qt_divide_exact(const QTPoly& num, const QTPoly& den, QTPoly& quot) {
  if (den.is_zero()) throw std::domain_error("qt_divide_exact: zero divisor");
  if (num.is_zero()) { quot = QTPoly(); return true; }
  long long s[3] = {1, 1, 1};
  scaling_of(num, s);
  scaling_of(den, s);
  long long offn[3], offd[3];
  IntPoly f = to_int(num, s, offn);
  IntPoly g = to_int(den, s, offd);
  auto glead = g.terms.rbegin();  // lex-largest
  IntPoly q;
  size_t guard = 4 * f.terms.size() * (g.terms.size() + 2) + 64;
  while (!f.terms.empty()) {
    if (guard-- == 0) return false;
    auto flead = f.terms.rbegin();
    std::array<long long, 3> e;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      e[i] = flead->first[i] - glead->first[i];
      if (e[i] < 0) ok = false;
    }
    if (!ok) return false;
    Rat c = flead->second / glead->second;
    q.terms[e] = c;
    for (auto& [gm, gc] : g.terms) {
      std::array<long long, 3> m{gm[0] + e[0], gm[1] + e[1], gm[2] + e[2]};
      auto it = f.terms.find(m);
      Rat v = (it == f.terms.end() ? Rat(0) : it->second) - c * gc;
      if (it != f.terms.end()) f.terms.erase(it);
      if (v != 0) f.terms.emplace(m, v);
    }
  }
  // convert back: exponents (e + offn - offd) / s
  quot = QTPoly();
  for (auto& [e, c] : q.terms) {
    QTMono m{Frac(e[0] + offn[0] - offd[0], s[0]),
             Frac(e[1] + offn[1] - offd[1], s[1]),
             Frac(e[2] + offn[2] - offd[2], s[2])};
    quot.add_term(m, c);
  }
  return true;
}

QTAtomized qt_atomize(const QTPoly& p) {
  QTAtomized r;
  if (p.is_zero()) throw std::domain_error("qt_atomize: zero");
  // unit monomial: shift min exponents to zero
  Frac mq = p.terms.begin()->first.qe, ms = p.terms.begin()->first.tse,
       ml = p.terms.begin()->first.tle;
  for (auto& [m, c] : p.terms) {
    (void)c;
    mq = std::min(mq, m.qe);
    ms = std::min(ms, m.tse);
    ml = std::min(ml, m.tle);
  }
  QTMono shift{mq, ms, ml};
  // content: gcd of numerators / lcm of denominators, signed by the
  // lex-largest term
  mpz_class gnum = 0, lden = 1;
  for (auto& [m, c] : p.terms) {
    (void)m;
    mpz_class n = abs(c.get_num());
    mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(gnum, lden);
  content.canonicalize();
  if (p.terms.rbegin()->second < 0) content = -content;
  r.unit_mono = shift;
  r.unit_coeff = content;
  r.atom = QTPoly();
  for (auto& [m, c] : p.terms)
    r.atom.terms.emplace(m * shift.inv(), Rat(c / content));
  return r;
}

void QTRat::reduce() {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = den.begin(); it != den.end(); ++it) {
      QTPoly q;
      if (qt_divide_exact(num, it->first, q)) {
        num = q;
        if (--it->second == 0) den.erase(it);
        progress = true;
        break;
      }
    }
  }
}

QTRat QTRat::operator*(const QTRat& o) const {
  QTRat r;
  r.num = num * o.num;
  r.den = den;
  for (auto& [a, m] : o.den) r.den[a] += m;
  r.reduce();
  return r;
}

QTRat QTRat::inverse() const {
  if (num.is_zero()) throw std::domain_error("QTRat: inverse of zero");
  QTRat r;
  r.num = QTPoly(1);
  for (auto& [a, m] : den)
    for (int i = 0; i < m; ++i) r.num = r.num * a;
  if (num.is_monomial()) {
    auto& [m, c] = *num.terms.begin();
    r.num = r.num.mul_mono(m.inv(), Rat(1) / c);
  } else {
    auto at = qt_atomize(num);
    r.num = r.num.mul_mono(at.unit_mono.inv(), Rat(1) / at.unit_coeff);
    r.den[at.atom] += 1;
    r.reduce();
  }
  return r;
}

QTRat QTRat::operator/(const QTRat& o) const { return *this * o.inverse(); }

QTRat QTRat::operator+(const QTRat& o) const {
  QTRat r;
  // common denominator: multiset max
  std::map<QTPoly, int> common = den;
  for (auto& [a, m] : o.den) {
    auto it = common.find(a);
    if (it == common.end()) common[a] = m;
    else it->second = std::max(it->second, m);
  }
  QTPoly lhs = num, rhs = o.num;
  for (auto& [a, m] : common) {
    int ma = 0, mb = 0;
    if (auto it = den.find(a); it != den.end()) ma = it->second;
    if (auto it = o.den.find(a); it != o.den.end()) mb = it->second;
    for (int i = ma; i < m; ++i) lhs = lhs * a;
    for (int i = mb; i < m; ++i) rhs = rhs * a;
  }
  r.num = lhs + rhs;
  if (r.num.is_zero()) return r;
  r.den = common;
  r.reduce();
  return r;
}

QTRat QTRat::operator-(const QTRat& o) const { return *this + (-o); }

QTRat QTRat::operator-() const {
  QTRat r = *this;
  r.num = -r.num;
  return r;
}

bool QTRat::equals(const QTRat& o) const {
  if (num == o.num && den == o.den) return true;
  // cross-multiplication: num * prod(o.den) == o.num * prod(den), with the
  // shared part of the denominators cancelled first
  QTPoly lhs = num, rhs = o.num;
  for (auto& [a, m] : o.den) {
    int shared = 0;
    if (auto it = den.find(a); it != den.end()) shared = std::min(it->second, m);
    for (int i = shared; i < m; ++i) lhs = lhs * a;
  }
  for (auto& [a, m] : den) {
    int shared = 0;
    if (auto it = o.den.find(a); it != o.den.end())
      shared = std::min(it->second, m);
    for (int i = shared; i < m; ++i) rhs = rhs * a;
  }
  return lhs == rhs;
}

QTRat QTRat::specialize(const Frac& ks, const Frac& kl, long long nu_lng,
                        int sgn_s, int sgn_l) const {
  QTRat r;
  r.num = num.specialize(ks, kl, nu_lng, sgn_s, sgn_l);
  for (auto& [a, m] : den) {
    QTPoly sa = a.specialize(ks, kl, nu_lng, sgn_s, sgn_l);
    if (sa.is_zero())
      throw std::domain_error("specialize: denominator vanishes (singular k)");
    if (sa.is_monomial()) {
      auto& [mm, cc] = *sa.terms.begin();
      for (int i = 0; i < m; ++i) r.num = r.num.mul_mono(mm.inv(), Rat(1) / cc);
    } else {
      auto at = qt_atomize(sa);
      for (int i = 0; i < m; ++i) {
        r.num = r.num.mul_mono(at.unit_mono.inv(), Rat(1) / at.unit_coeff);
        r.den[at.atom] += 1;
      }
    }
  }
  r.reduce();
  return r;
}

QTRat QTRat::shift_t(long long shift, long long nu_lng) const {
  QTRat r;
  r.num = num.shift_t(shift, nu_lng);
  for (auto& [a, m] : den) {
    QTPoly sa = a.shift_t(shift, nu_lng);
    auto at = qt_atomize(sa);
    for (int i = 0; i < m; ++i) {
      r.num = r.num.mul_mono(at.unit_mono.inv(), Rat(1) / at.unit_coeff);
      r.den[at.atom] += 1;
    }
  }
  r.reduce();
  return r;
}

std::string QTRat::str() const {
  std::ostringstream os;
  os << "(" << num.str() << ")";
  for (auto& [a, m] : den)
    os << " / (" << a.str() << ")^" << m;
  return os.str();
}

std::string QTRat::json() const {
  auto poly_json = [](const QTPoly& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [m, c] : p.terms) {
      if (!first) os << ",";
      first = false;
      os << "[\"" << m.qe.str() << "\",\"" << m.tse.str() << "\",\""
         << m.tle.str() << "\",\"" << c.get_str() << "\"]";
    }
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  os << "{\"num\":" << poly_json(num) << ",\"den\":[";
  bool first = true;
  for (auto& [a, m] : den)
    for (int i = 0; i < m; ++i) {
      if (!first) os << ",";
      first = false;
      os << poly_json(a);
    }
  os << "]}";
  return os.str();
}

}  // namespace daha

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "daha/frac.hpp"

namespace daha {

using Rat = mpq_class;

// Monomial q^{qe} t_sht^{tse} t_lng^{tle} with exact rational exponents.
// The working ring keeps qe in (1/2m~)Z and the t-exponents in (1/2)Z.
struct QTMono {
  Frac qe, tse, tle;

  friend bool operator==(const QTMono& a, const QTMono& b) {
    return a.qe == b.qe && a.tse == b.tse && a.tle == b.tle;
  }
  friend bool operator<(const QTMono& a, const QTMono& b) {
    if (a.qe != b.qe) return a.qe < b.qe;
    if (a.tse != b.tse) return a.tse < b.tse;
    return a.tle < b.tle;
  }
  QTMono operator*(const QTMono& o) const {
    return QTMono{qe + o.qe, tse + o.tse, tle + o.tle};
  }
  QTMono inv() const { return QTMono{-qe, -tse, -tle}; }
  bool is_one() const { return qe.is_zero() && tse.is_zero() && tle.is_zero(); }
};

// Laurent polynomial in q^{1/(2m~)}, t_sht^{1/2}, t_lng^{1/2} with exact
// rational coefficients.
class QTPoly {
 public:
  std::map<QTMono, Rat> terms;

  QTPoly() = default;
  explicit QTPoly(long long c) {
    if (c) terms[QTMono{}] = Rat((long)c);
  }
  explicit QTPoly(const Rat& c) { if (c != 0) terms[QTMono{}] = c; }
  static QTPoly monomial(const QTMono& m, const Rat& c = Rat(1)) {
    QTPoly p;
    if (c != 0) p.terms[m] = c;
    return p;
  }
  static QTPoly one() { return QTPoly(1); }

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.is_one() &&
           terms.begin()->second == 1;
  }
  size_t size() const { return terms.size(); }

  void add_term(const QTMono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) { terms.emplace(m, c); return; }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }

  QTPoly operator+(const QTPoly& o) const;
  QTPoly operator-(const QTPoly& o) const;
  QTPoly operator*(const QTPoly& o) const;
  QTPoly operator-() const;
  QTPoly mul_mono(const QTMono& m, const Rat& c = Rat(1)) const;
  friend bool operator==(const QTPoly& a, const QTPoly& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }
  friend bool operator<(const QTPoly& a, const QTPoly& b);

  // substitute t_nu -> sgn_nu * q^{nu k_nu}; sgn in {+1,-1} (rotation 0, 1/2)
  QTPoly specialize(const Frac& ks, const Frac& kl, long long nu_lng,
                    int sgn_s = 1, int sgn_l = 1) const;
  // substitute t_nu -> t_nu * q^{nu * shift} (the k -> k + shift translation)
  QTPoly shift_t(long long shift, long long nu_lng) const;

  // truncate q-exponents above the bound (for series work mod q^{M+1})
  QTPoly truncate_q(const Frac& qmax) const;

  std::string str() const;
};

// Exact division; returns false if the divisor does not divide evenly.
bool qt_divide_exact(const QTPoly& num, const QTPoly& den, QTPoly& quot);

// Canonical atom form of a non-monomial polynomial: strips a unit monomial
// u (with rational coefficient) so that atom = p / u has integer content 1,
// min exponents 0 per variable, and positive leading coefficient.
struct QTAtomized {
  QTPoly atom;
  QTMono unit_mono;
  Rat unit_coeff;
};
QTAtomized qt_atomize(const QTPoly& p);

// Rational function num / prod(atoms^mult); the denominator is kept in
// factored form and reduction only cancels exact-division factors.
class QTRat {
 public:
  QTPoly num;
  std::map<QTPoly, int> den;  // canonical atoms with multiplicities

  QTRat() : num() {}
  explicit QTRat(long long c) : num(c) {}
  explicit QTRat(const Rat& c) : num(c) {}
  explicit QTRat(const QTPoly& p) : num(p) {}
  static QTRat monomial(const QTMono& m, const Rat& c = Rat(1)) {
    return QTRat(QTPoly::monomial(m, c));
  }
  static QTRat one() { return QTRat(1); }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.empty(); }

  QTRat operator+(const QTRat& o) const;
  QTRat operator-(const QTRat& o) const;
  QTRat operator*(const QTRat& o) const;
  QTRat operator/(const QTRat& o) const;
  QTRat operator-() const;
  QTRat& operator+=(const QTRat& o) { *this = *this + o; return *this; }
  QTRat& operator-=(const QTRat& o) { *this = *this - o; return *this; }
  QTRat& operator*=(const QTRat& o) { *this = *this * o; return *this; }
  QTRat& operator/=(const QTRat& o) { *this = *this / o; return *this; }
  QTRat inverse() const;

  // cancel denominator atoms dividing the numerator
  void reduce();

  // value equality via cross-multiplication
  bool equals(const QTRat& o) const;
  friend bool operator==(const QTRat& a, const QTRat& b) { return a.equals(b); }
  friend bool operator!=(const QTRat& a, const QTRat& b) { return !(a == b); }

  QTRat specialize(const Frac& ks, const Frac& kl, long long nu_lng,
                   int sgn_s = 1, int sgn_l = 1) const;
  QTRat shift_t(long long shift, long long nu_lng) const;

  std::string str() const;
  std::string json() const;
};

}  // namespace daha

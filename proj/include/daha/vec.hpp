#pragma once

#include <vector>
#include <cstdint>
#include <stdexcept>

#include "daha/frac.hpp"

namespace daha {

using IVec = std::vector<long long>;   // integer coordinate vector
using QVec = std::vector<Frac>;        // rational coordinate vector
using IMat = std::vector<IVec>;        // row-major integer matrix
using QMat = std::vector<QVec>;        // row-major rational matrix

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline IVec ivec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline IVec ivec_scale(long long c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline bool ivec_is_zero(const IVec& a) {
  for (auto x : a) if (x != 0) return false;
  return true;
}

inline QVec to_qvec(const IVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Frac(a[i]);
  return r;
}
inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline QVec qvec_scale(const Frac& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// y = M x for an integer matrix acting on integer coordinates.
inline IVec imat_apply(const IMat& m, const IVec& x) {
  IVec y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}
inline QVec imat_apply(const IMat& m, const QVec& x) {
  QVec y(m.size(), Frac(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += Frac(m[i][j]) * x[j];
  return y;
}
inline IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size();
  IMat c(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long v = a[i][k];
      if (!v) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += v * b[k][j];
    }
  return c;
}
inline IMat imat_identity(size_t n) {
  IMat m(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Exact inverse of a rational matrix by Gauss-Jordan elimination.
QMat qmat_inverse(const QMat& m);

inline QVec qmat_apply(const QMat& m, const QVec& x) {
  QVec y(m.size(), Frac(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

}  // namespace daha

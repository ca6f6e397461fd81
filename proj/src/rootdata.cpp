#include "daha/rootdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace daha {

std::ostream& operator<<(std::ostream& os, const Frac& f) {
  return os << f.str();
}

Frac Frac::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Frac(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Frac(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad fraction literal: " + s);
  }
}

QMat qmat_inverse(const QMat& m) {
  size_t n = m.size();
  QMat a = m, inv(n, QVec(n, Frac(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Frac(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("qmat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Frac d = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Frac f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool valid_type_rank(char type, int rank) {
  if (rank < 1 || rank > 8) return false;
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

// Cartan matrix entries cartan[i][j] = (alpha_i^vee, alpha_j), Bourbaki
// numbering throughout.
IMat cartan_matrix(char type, int n) {
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // chain 1-3-4-5-..., branch 2 attached to 4 (Bourbaki)
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1); link(1, 2); link(2, 3);
      a[2][1] = -2;  // (alpha_3^vee, alpha_2) = -2, short row against long
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      a[0][1] = -3; a[1][0] = -1;
      break;
  }
  return a;
}

std::vector<long long> simple_nus(char type, int n) {
  std::vector<long long> nu(n, 1);
  switch (type) {
    case 'B': for (int i = 0; i < n - 1; ++i) nu[i] = 2; break;
    case 'C': nu[n - 1] = 2; break;
    case 'F': nu[0] = nu[1] = 2; break;
    case 'G': nu[1] = 3; break;
    default: break;
  }
  return nu;
}

}  // namespace

RootDatum RootDatum::build(char type, int rank, Lattice lattice) {
  if (!valid_type_rank(type, rank))
    throw std::invalid_argument(std::string("invalid root system type ") +
                                type + std::to_string(rank));
  RootDatum rd;
  rd.type_ = type;
  rd.rank_ = rank;
  rd.lattice_ = lattice;
  rd.cartan_ = cartan_matrix(type, rank);
  rd.nu_simple_ = simple_nus(type, rank);
  rd.nu_lng_ = 1;
  for (auto v : rd.nu_simple_) rd.nu_lng_ = std::max(rd.nu_lng_, v);
  rd.finalize();
  return rd;
}

void RootDatum::finalize() {
  int n = rank_;
  // Enumerate positive roots in the simple-root basis by height, using
  // root strings: beta + alpha_i is a root iff p - (beta, alpha_i^vee) < 0
  // where p is the largest k with beta - k alpha_i a root.
  std::map<IVec, long long> seen;  // alpha-coords -> nu
  std::vector<IVec> by_height;
  for (int i = 0; i < n; ++i) {
    IVec a(n, 0);
    a[i] = 1;
    seen[a] = nu_simple_[i];
    by_height.push_back(a);
  }
  // Gram matrix in simple-root coordinates: (alpha_i, alpha_j) = nu_i * a_ij.
  auto gram_a = [&](int i, int j) { return nu_simple_[i] * cartan_[i][j]; };
  auto norm2 = [&](const IVec& v) {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += v[i] * v[j] * gram_a(i, j);
    return s;
  };
  auto pair_simple_covee = [&](const IVec& v, int i) {
    // (v, alpha_i^vee) with v in alpha-coords
    long long s = 0;
    for (int j = 0; j < n; ++j) s += cartan_[i][j] * v[j];
    return s;
  };
  for (size_t head = 0; head < by_height.size(); ++head) {
    IVec beta = by_height[head];
    for (int i = 0; i < n; ++i) {
      // p = largest k >= 0 with beta - k alpha_i a positive root
      long long p = 0;
      IVec d2 = beta;
      while (true) {
        d2[i] -= 1;
        if (seen.count(d2)) { ++p; continue; }
        break;
      }
      long long q = p - pair_simple_covee(beta, i);
      if (q > 0) {
        IVec up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          long long nn = norm2(up);
          seen[up] = nn / 2;
          by_height.push_back(up);
        }
      }
    }
  }
  std::sort(by_height.begin(), by_height.end(), [&](const IVec& x, const IVec& y) {
    long long hx = 0, hy = 0;
    for (auto c : x) hx += c;
    for (auto c : y) hy += c;
    if (hx != hy) return hx < hy;
    return x < y;
  });

  // omega-coordinates of a simple-root-basis vector: coord_j = (v, alpha_j^vee)
  auto to_omega = [&](const IVec& v) {
    Weight w(n, 0);
    for (int j = 0; j < n; ++j) w[j] = pair_simple_covee(v, j);
    return w;
  };

  pos_.clear();
  root_lookup_.clear();
  for (const auto& a : by_height) {
    PositiveRoot pr;
    pr.alpha = a;
    pr.omega = to_omega(a);
    pr.nu = seen[a];
    for (auto c : a) pr.height += c;
    pos_.push_back(pr);
  }
  for (int k = 0; k < (int)pos_.size(); ++k) {
    root_lookup_[pos_[k].omega] = k + 1;
    root_lookup_[ivec_neg(pos_[k].omega)] = -(k + 1);
  }

  // rho_nu, counts, coroot heights
  rho_sht_.assign(n, 0);
  rho_lng_.assign(n, 0);
  ae_sht_ = ae_lng_ = 0;
  for (int i = 0; i < n; ++i)
    (nu_simple_[i] == 1 ? rho_sht_ : rho_lng_)[i] = 1;
  for (auto& pr : pos_) {
    (pr.nu == 1 ? ae_sht_ : ae_lng_)++;
    // coroot height: alpha^vee = alpha/nu expanded in simple coroots
    // alpha = sum c_i alpha_i => alpha^vee = sum (c_i nu_i / nu_alpha) alpha_i^vee
    Frac h(0);
    for (int i = 0; i < n; ++i)
      h += Frac(pr.alpha[i] * nu_simple_[i], pr.nu);
    if (!h.is_integer()) throw std::logic_error("coroot height not integral");
    pr.cht = h.num;
  }
  if (simply_laced()) { rho_lng_.assign(n, 0); ae_lng_ = 0; }

  // theta: the dominant short root; highest root: dominant long (or theta).
  theta_idx_ = high_idx_ = -1;
  for (int k = 0; k < (int)pos_.size(); ++k) {
    bool dom = true;
    for (int i = 0; i < n && dom; ++i)
      if (pos_[k].omega[i] < 0) dom = false;
    if (!dom) continue;
    if (pos_[k].nu == 1 && !ivec_is_zero(pos_[k].omega)) theta_idx_ = k;
    if (pos_[k].nu == nu_lng_) high_idx_ = k;
  }
  if (simply_laced()) high_idx_ = theta_idx_;
  if (theta_idx_ < 0 || high_idx_ < 0)
    throw std::logic_error("dominant roots not found");

  // Gram matrix on weight coordinates.
  QMat cart(n, QVec(n, Frac(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cart[i][j] = Frac(cartan_[i][j]);
  // x_omega = M c with M[j][i] = cartan[j][i]; so c = M^{-1} x.
  QMat m(n, QVec(n, Frac(0)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m[j][i] = Frac(cartan_[j][i]);
  inv_cartan_t_ = qmat_inverse(m);
  gram_omega_.assign(n, QVec(n, Frac(0)));
  // (x,y) = c_x^T G_alpha c_y with G_alpha[i][j] = nu_i cartan[i][j]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Frac s(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s += inv_cartan_t_[k][i] * Frac(nu_simple_[k] * cartan_[k][l]) *
               inv_cartan_t_[l][j];
      gram_omega_[i][j] = s;
    }

  // Affine diagram laces and braid orders on indices 0..n with
  // alpha_0 = -theta (level part irrelevant for pairings).
  laces_.assign(n + 1, std::vector<int>(n + 1, 0));
  braid_.assign(n + 1, std::vector<int>(n + 1, 2));
  auto simple_vec = [&](int i) -> Weight {
    if (i == 0) return ivec_neg(pos_[theta_idx_].omega);
    Weight w(n, 0);
    w[i - 1] = 1;
    // convert the alpha basis unit to omega coords
    IVec a(n, 0);
    a[i - 1] = 1;
    return to_omega(a);
  };
  auto nu_affine = [&](int i) {
    return i == 0 ? (long long)1 : nu_simple_[i - 1];
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      Weight vi = simple_vec(i), vj = simple_vec(j);
      Frac pij = pairing(vi, vj) / Frac(nu_affine(i));
      Frac pji = pairing(vi, vj) / Frac(nu_affine(j));
      Frac prod = pij * pji;  // (ai^vee,aj)(aj^vee,ai)
      long long v = prod.num;  // integral
      laces_[i][j] = (int)v == 4 ? 4 : (int)v;
      switch (v) {
        case 0: braid_[i][j] = 2; break;
        case 1: braid_[i][j] = 3; break;
        case 2: braid_[i][j] = 4; break;
        case 3: braid_[i][j] = 6; break;
        default: braid_[i][j] = 0; break;  // infinite bond (affine A1)
      }
    }

  // Pi-orbit: 0 together with the minuscule fundamental weights.
  orbit_.clear();
  orbit_.push_back(0);
  for (int r = 1; r <= n; ++r) {
    Weight w(n, 0);
    w[r - 1] = 1;
    bool minuscule = true;
    for (int k = 0; k < (int)pos_.size() && minuscule; ++k)
      if (pair_coroot(w, k) > Frac(1)) minuscule = false;
    if (minuscule) orbit_.push_back(r);
  }

  // m_tilde for the configured lattice.
  long long mt = 1;
  auto lcm_den = [&](const Frac& f) { mt = std::lcm(mt, f.den); };
  if (lattice_ == Lattice::P) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lcm_den(gram_omega_[i][j]);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lcm_den(Frac(nu_simple_[i] * cartan_[i][j]));
  }
  m_tilde_ = mt;
}

Frac RootDatum::pairing(const QVec& x, const QVec& y) const {
  Frac s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * gram_omega_[i][j] * y[j];
  return s;
}

Frac RootDatum::pairing(const Weight& x, const Weight& y) const {
  Frac s(0);
  for (int i = 0; i < rank_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (y[j]) s += Frac(x[i]) * gram_omega_[i][j] * Frac(y[j]);
  }
  return s;
}

Frac RootDatum::pair_coroot(const Weight& x, int k) const {
  // (x, alpha^vee) = (x, alpha)/nu; with alpha in alpha-coords this is
  // sum_i c_i nu_i x_i / nu_alpha (x_i are omega-coordinates).
  const auto& pr = pos_[k];
  Frac s(0);
  for (int i = 0; i < rank_; ++i)
    if (pr.alpha[i]) s += Frac(pr.alpha[i] * nu_simple_[i] * x[i]);
  return s / Frac(pr.nu);
}

Frac RootDatum::pair_coroot(const QVec& x, int k) const {
  const auto& pr = pos_[k];
  Frac s(0);
  for (int i = 0; i < rank_; ++i)
    if (pr.alpha[i]) s += Frac(pr.alpha[i] * nu_simple_[i]) * x[i];
  return s / Frac(pr.nu);
}

Weight RootDatum::reflect_simple(int i, const Weight& x) const {
  // s_i(x) = x - (x, alpha_i^vee) alpha_i; the omega-coordinate i of x is
  // exactly (x, alpha_i^vee).
  Weight r = x;
  long long c = x[i];
  if (!c) return r;
  // omega-coordinates of alpha_i: column i of the Cartan matrix transposed
  for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[j][i];
  return r;
}

QVec RootDatum::reflect_simple(int i, const QVec& x) const {
  QVec r = x;
  Frac c = x[i];
  if (c.is_zero()) return r;
  for (int j = 0; j < rank_; ++j) r[j] -= c * Frac(cartan_[j][i]);
  return r;
}

Weight RootDatum::reflect_root(int k, const Weight& x) const {
  Frac c = pair_coroot(x, k);
  Weight r = x;
  if (c.is_zero()) return r;
  if (!c.is_integer()) throw std::logic_error("non-integral coroot pairing");
  for (int j = 0; j < rank_; ++j) r[j] -= c.num * pos_[k].omega[j];
  return r;
}

int RootDatum::root_index(const Weight& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? 0 : it->second;
}

Weight RootDatum::root_vector(const AffineRoot& a) const {
  const auto& w = pos_[std::abs(a.idx) - 1].omega;
  return a.idx > 0 ? w : ivec_neg(w);
}

const Weight& RootDatum::rho_nu(long long nu) const {
  return nu == 1 ? rho_sht_ : rho_lng_;
}

QVec RootDatum::rho_nu_covee(long long nu) const {
  const Weight& r = rho_nu(nu);
  QVec v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = Frac(r[i], nu);
  return v;
}

Weight RootDatum::rho() const { return Weight(rank_, 1); }

QVec RootDatum::rho_covee() const {
  QVec v = rho_nu_covee(1);
  if (!simply_laced()) v = qvec_add(v, rho_nu_covee(nu_lng_));
  return v;
}

long long RootDatum::ae_count(long long nu) const {
  return nu == 1 ? ae_sht_ : ae_lng_;
}

std::vector<long long> RootDatum::nu_values() const {
  if (simply_laced()) return {1};
  return {1, nu_lng_};
}

std::vector<AffineRoot> RootDatum::affine_simple_roots() const {
  std::vector<AffineRoot> v;
  for (int i = 0; i <= rank_; ++i) v.push_back(affine_simple(i));
  return v;
}

AffineRoot RootDatum::affine_simple(int i) const {
  if (i == 0) return AffineRoot{-(theta_idx_ + 1), 1};
  // simple root alpha_i as a positive root entry (height 1, coordinate i-1)
  IVec a(rank_, 0);
  a[i - 1] = 1;
  for (int k = 0; k < (int)pos_.size(); ++k)
    if (pos_[k].alpha == a) return AffineRoot{k + 1, 0};
  throw std::logic_error("simple root not found");
}

AffineRoot RootDatum::act_simple(int i, const AffineRoot& a) const {
  // s_{alpha~}(z~) = z~ - (z, alpha^vee) alpha~ with alpha~ the i-th affine
  // simple root.
  AffineRoot ai = affine_simple(i);
  return reflect_affine(ai, a);
}

AffineRoot RootDatum::reflect_affine(const AffineRoot& by, const AffineRoot& a) const {
  Weight zby = root_vector(by);
  Weight za = root_vector(a);
  int kby = std::abs(by.idx) - 1;
  Frac c = pairing(za, zby) / Frac(pos_[kby].nu);  // (z, alpha^vee)
  if (!c.is_integer()) throw std::logic_error("reflect_affine: bad pairing");
  // affine coordinate of an AffineRoot {idx, level} is nu * level
  long long lev_by = pos_[kby].nu * by.level;
  Weight z = ivec_sub(za, ivec_scale(c.num, zby));
  long long aff = nu_of(a) * a.level - c.num * lev_by;
  int idx = root_index(z);
  if (!idx) throw std::logic_error("reflect_affine: image not a root");
  long long nu_new = pos_[std::abs(idx) - 1].nu;
  if (aff % nu_new != 0) throw std::logic_error("reflect_affine: bad level");
  return AffineRoot{idx, aff / nu_new};
}

QVec RootDatum::act_simple_point(int i, const QVec& z) const {
  // s_{[alpha, nu j]}((z)) = z - ((z,alpha^vee) + j) alpha
  if (i > 0) return reflect_simple(i - 1, z);
  const auto& th = pos_[theta_idx_];
  Frac c = pair_coroot(z, theta_idx_);  // (z, theta^vee)
  // alpha_0 = [-theta, 1]: s_0((z)) = z + (1 - (z, theta^vee)) theta
  Frac coef = Frac(1) - c;
  QVec r = z;
  for (int j = 0; j < rank_; ++j) r[j] += coef * Frac(th.omega[j]);
  return r;
}

bool RootDatum::in_pi_orbit(int r) const {
  for (int x : orbit_) if (x == r) return true;
  return false;
}

bool RootDatum::in_lattice(const Weight& x) const {
  if (lattice_ == Lattice::P) return true;
  QVec c = to_alpha_coords(x);
  for (auto& f : c) if (!f.is_integer()) return false;
  return true;
}

QVec RootDatum::to_alpha_coords(const Weight& x) const {
  return qmat_apply(inv_cartan_t_, to_qvec(x));
}

std::string RootDatum::json() const {
  std::ostringstream os;
  os << "{\"schema\":\"daha.rootdatum.v1\",\"type\":\"" << type_
     << "\",\"rank\":" << rank_ << ",\"lattice\":\""
     << (lattice_ == Lattice::Q ? "Q" : "P") << "\",\"nu_lng\":" << nu_lng_
     << ",\"m_tilde\":" << m_tilde_ << ",\"theta\":" << theta_idx_
     << ",\"positive_roots\":[";
  for (size_t k = 0; k < pos_.size(); ++k) {
    if (k) os << ",";
    os << "{\"alpha\":[";
    for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << pos_[k].alpha[i];
    os << "],\"nu\":" << pos_[k].nu << "}";
  }
  os << "],\"pi_orbit\":[";
  for (size_t i = 0; i < orbit_.size(); ++i) os << (i ? "," : "") << orbit_[i];
  os << "]}";
  return os.str();
}

}  // namespace daha

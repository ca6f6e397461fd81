#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/frac.hpp"
#include "daha/vec.hpp"

namespace daha {

// Lattice used for the X-variables (and for translations in the extended
// affine Weyl group): the root lattice Q or the weight lattice P.
enum class Lattice { Q, P };

// Weights are integer vectors in the fundamental-weight basis.
// Roots are weights too (Q is a sublattice of P), kept in the same basis.
using Weight = IVec;

// An affine root [alpha, nu_alpha * j]: a signed index into the table of
// positive roots plus an integral level j.  alpha_0 = [-theta, 1].
struct AffineRoot {
  int idx = 1;    // +(k+1) for positive_roots[k], -(k+1) for its negative
  long long level = 0;  // the integer j in [alpha, nu_alpha * j]

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.idx == b.idx && a.level == b.level;
  }
  friend bool operator!=(const AffineRoot& a, const AffineRoot& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.idx < b.idx;
  }
  AffineRoot negated() const { return AffineRoot{-idx, -level}; }
};

struct PositiveRoot {
  Weight omega;          // coordinates in the fundamental-weight basis
  IVec alpha;            // coordinates in the simple-root basis
  long long nu = 1;      // (alpha,alpha)/2 under the short-root normalization
  long long height = 0;  // sum of simple-root coordinates
  long long cht = 0;     // height of the coroot, (alpha^vee, rho)
};

// A finite reduced irreducible root system A..G with the normalization
// (alpha,alpha) = 2 for short roots, its affine extension data and the
// lattices Q and P.  Immutable after construction.
class RootDatum {
 public:
  static RootDatum build(char type, int rank, Lattice lattice = Lattice::P);

  char type() const { return type_; }
  int rank() const { return rank_; }
  Lattice lattice() const { return lattice_; }
  long long nu_lng() const { return nu_lng_; }
  bool simply_laced() const { return nu_lng_ == 1; }

  // cartan(i,j) = (alpha_i^vee, alpha_j), 1-based combinatorial data stored
  // 0-based here (i,j in 0..n-1 index the nonaffine simple roots).
  long long cartan(int i, int j) const { return cartan_[i][j]; }
  long long nu_simple(int i) const { return nu_simple_[i]; }

  const std::vector<PositiveRoot>& positive_roots() const { return pos_; }
  int num_positive() const { return (int)pos_.size(); }
  int theta_index() const { return theta_idx_; }   // maximal short root
  int hightheta_index() const { return high_idx_; }  // highest (long) root

  // Exact bilinear form on weight-basis coordinates.
  Frac pairing(const QVec& x, const QVec& y) const;
  Frac pairing(const Weight& x, const Weight& y) const;
  // (x, alpha^vee) for the k-th positive root (0-based index).
  Frac pair_coroot(const Weight& x, int k) const;
  Frac pair_coroot(const QVec& x, int k) const;

  // Simple-reflection action on weight-basis coordinates, i in 0..n-1.
  Weight reflect_simple(int i, const Weight& x) const;
  QVec reflect_simple(int i, const QVec& x) const;
  // s_alpha for the k-th positive root.
  Weight reflect_root(int k, const Weight& x) const;

  // Lookup of a root by its weight-basis coordinate vector; returns the
  // signed index (+/-(k+1)) or 0 when the vector is not a root.
  int root_index(const Weight& v) const;
  Weight root_vector(const AffineRoot& a) const;  // nonaffine part
  long long nu_of(const AffineRoot& a) const { return pos_[std::abs(a.idx) - 1].nu; }
  bool affine_positive(const AffineRoot& a) const {
    return a.level > 0 || (a.level == 0 && a.idx > 0);
  }

  // rho_nu and rho_nu^vee = rho_nu / nu as weight-basis vectors.
  const Weight& rho_nu(long long nu) const;
  QVec rho_nu_covee(long long nu) const;
  Weight rho() const;       // rho = sum of fundamental weights
  QVec rho_covee() const;   // rho^vee = sum over nu of rho_nu/nu
  long long ae_count(long long nu) const;  // number of positive roots of length nu
  std::vector<long long> nu_values() const;

  // The affine simple roots [alpha_0 = [-theta,1], alpha_1, ..., alpha_n].
  std::vector<AffineRoot> affine_simple_roots() const;
  AffineRoot affine_simple(int i) const;  // i in 0..n
  // Lace counts m_{ij} over the affine diagram and the braid order of
  // s_i s_j (2,3,4,6; 0 encodes an infinite bond as in affine A_1).
  int lace_count(int i, int j) const { return laces_[i][j]; }
  int braid_order(int i, int j) const { return braid_[i][j]; }

  // Linear action (ondon) of s_i (i in 0..n) on affine roots and the
  // affine action (afaction) on rational points.
  AffineRoot act_simple(int i, const AffineRoot& a) const;
  QVec act_simple_point(int i, const QVec& z) const;

  // Reflection by an arbitrary affine root, acting linearly on affine roots.
  AffineRoot reflect_affine(const AffineRoot& by, const AffineRoot& a) const;

  // Diagram-automorphism orbit O of alpha_0: 0 plus all r with omega_r
  // minuscule; empty O' for E8, F4, G2.
  const std::vector<int>& pi_orbit() const { return orbit_; }
  bool in_pi_orbit(int r) const;

  // Least m with m*(B,B) in Z for the configured lattice B.
  long long m_tilde() const { return m_tilde_; }

  // Membership of a weight-basis vector in the configured lattice.
  bool in_lattice(const Weight& x) const;
  // Simple-root coordinates of a weight (rational in general).
  QVec to_alpha_coords(const Weight& x) const;

  std::string json() const;  // versioned JSON document

 private:
  char type_;
  int rank_;
  Lattice lattice_;
  long long nu_lng_ = 1;
  IMat cartan_;                     // nonaffine Cartan matrix
  std::vector<long long> nu_simple_;
  std::vector<PositiveRoot> pos_;
  std::map<Weight, int> root_lookup_;
  int theta_idx_ = 0;
  int high_idx_ = 0;
  QMat gram_omega_;                 // Gram matrix on weight coordinates
  QMat inv_cartan_t_;               // for omega -> alpha coordinate change
  std::vector<std::vector<int>> laces_, braid_;  // (n+1) x (n+1)
  std::vector<int> orbit_;
  Weight rho_sht_, rho_lng_;
  long long ae_sht_ = 0, ae_lng_ = 0;
  long long m_tilde_ = 1;

  void finalize();
};

// Valid (type, rank) pairs: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2,
// all with rank <= 8.
bool valid_type_rank(char type, int rank);

}  // namespace daha

#include "daha/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace daha {

IMat w_matrix_identity(const RootDatum& rd) { return imat_identity(rd.rank()); }

IMat w_simple_matrix(const RootDatum& rd, int i) {
  int n = rd.rank();
  IMat m = imat_identity(n);
  // s_i on omega-coordinates: x -> x - x_i * (omega-coords of alpha_i)
  for (int j = 0; j < n; ++j) m[j][i] -= rd.cartan(j, i);
  return m;
}

namespace {

IMat imat_inverse(const IMat& m) {
  int n = (int)m.size();
  QMat q(n, QVec(n, Frac(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Frac(m[i][j]);
  QMat qi = qmat_inverse(q);
  IMat r(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!qi[i][j].is_integer())
        throw std::logic_error("imat_inverse: non-integral inverse");
      r[i][j] = qi[i][j].num;
    }
  return r;
}

}  // namespace

AffineElem AffineElem::identity(const RootDatum& rd) {
  return AffineElem{imat_identity(rd.rank()), Weight(rd.rank(), 0)};
}

AffineElem AffineElem::translation(const RootDatum& rd, const Weight& b) {
  (void)rd;
  return AffineElem{imat_identity((int)b.size()), b};
}

AffineElem AffineElem::simple(const RootDatum& rd, int i) {
  if (i == 0) return reflection(rd, rd.affine_simple(0));
  return AffineElem{w_simple_matrix(rd, i - 1), Weight(rd.rank(), 0)};
}

AffineElem AffineElem::reflection(const RootDatum& rd, const AffineRoot& a) {
  // s_{[x, nu j]}: z -> s_x(z) - j x  (x the signed root vector)
  int n = rd.rank();
  int k = std::abs(a.idx) - 1;
  Weight x = rd.root_vector(a);
  IMat m = imat_identity(n);
  for (int j = 0; j < n; ++j) {
    Weight e(n, 0);
    e[j] = 1;
    Frac c = rd.pair_coroot(e, k);
    if (!c.is_integer()) throw std::logic_error("reflection: bad pairing");
    long long cc = c.num * (a.idx > 0 ? 1 : -1);  // (e_j, x^vee)
    for (int r = 0; r < n; ++r) m[r][j] -= cc * x[r];
  }
  return AffineElem{m, ivec_scale(-a.level, x)};
}

AffineElem AffineElem::compose(const RootDatum& rd, const AffineElem& rhs) const {
  (void)rd;
  // (w1,t1)(w2,t2): z -> w1(w2 z + t2) + t1
  return AffineElem{imat_mul(w, rhs.w), ivec_add(imat_apply(w, rhs.t), t)};
}

AffineElem AffineElem::inverse(const RootDatum& rd) const {
  (void)rd;
  IMat wi = imat_inverse(w);
  return AffineElem{wi, ivec_neg(imat_apply(wi, t))};
}

Weight AffineElem::translation_part(const RootDatum& rd) const {
  (void)rd;
  return imat_apply(imat_inverse(w), t);
}

AffineRoot AffineElem::act(const RootDatum& rd, const AffineRoot& a) const {
  Weight x = rd.root_vector(a);
  long long zeta = rd.nu_of(a) * a.level;
  Weight nx = imat_apply(w, x);
  Frac inner = rd.pairing(nx, t);  // (x, b) = (w x, t)
  if (!inner.is_integer()) throw std::logic_error("act: non-integral (x,b)");
  long long nzeta = zeta - inner.num;
  int idx = rd.root_index(nx);
  if (!idx) throw std::logic_error("act: image not a root");
  long long nu = rd.positive_roots()[std::abs(idx) - 1].nu;
  if (nzeta % nu != 0) throw std::logic_error("act: bad level");
  return AffineRoot{idx, nzeta / nu};
}

QVec AffineElem::act_point(const RootDatum& rd, const QVec& z) const {
  (void)rd;
  QVec s = imat_apply(w, z);
  for (size_t i = 0; i < s.size(); ++i) s[i] += Frac(t[i]);
  return s;
}

Weight AffineElem::act_origin(const RootDatum& rd) const {
  (void)rd;
  return t;
}

std::pair<Weight, Frac> AffineElem::act_xweight(const RootDatum& rd,
                                                const Weight& x,
                                                const Frac& qexp) const {
  Weight nx = imat_apply(w, x);
  Frac inner = rd.pairing(nx, t);
  return {nx, qexp - inner};
}

long long length(const RootDatum& rd, const AffineElem& e) {
  long long l = 0;
  int np = rd.num_positive();
  for (int k = 0; k < np; ++k) {
    Weight xp = rd.positive_roots()[k].omega;
    Weight wxp = imat_apply(e.w, xp);
    Frac hp = rd.pairing(wxp, e.t) / Frac(rd.positive_roots()[k].nu);
    if (!hp.is_integer()) throw std::logic_error("length: bad pairing");
    int wsign = rd.root_index(wxp) > 0 ? +1 : -1;
    for (int sign = +1; sign >= -1; sign -= 2) {
      long long h = sign > 0 ? hp.num : -hp.num;
      long long jmin = sign > 0 ? 0 : 1;
      if (h > jmin) l += h - jmin;
      if (h >= jmin && wsign * sign < 0) l += 1;
    }
  }
  return l;
}

std::vector<AffineRoot> lambda_set(const RootDatum& rd, const AffineElem& e) {
  std::vector<AffineRoot> out;
  int np = rd.num_positive();
  for (int k = 0; k < np; ++k) {
    Weight xp = rd.positive_roots()[k].omega;
    Weight wxp = imat_apply(e.w, xp);
    Frac hp = rd.pairing(wxp, e.t) / Frac(rd.positive_roots()[k].nu);
    int wsign = rd.root_index(wxp) > 0 ? +1 : -1;
    for (int sign = +1; sign >= -1; sign -= 2) {
      long long h = sign > 0 ? hp.num : -hp.num;
      long long jmin = sign > 0 ? 0 : 1;
      for (long long j = jmin; j < h; ++j)
        out.push_back(AffineRoot{sign * (k + 1), j});
      if (h >= jmin && wsign * sign < 0)
        out.push_back(AffineRoot{sign * (k + 1), h});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineElem pi_r_element(const RootDatum& rd, int r) {
  if (r == 0) return AffineElem::identity(rd);
  if (!rd.in_pi_orbit(r))
    throw std::invalid_argument("pi_r: index not in the diagram orbit");
  Weight w(rd.rank(), 0);
  w[r - 1] = 1;
  return reduce_mod_w(rd, w).pi_elem;
}

AffineElem element_of_word(const RootDatum& rd, const Word& w) {
  AffineElem e = w.pi == 0 ? AffineElem::identity(rd) : pi_r_element(rd, w.pi);
  // pi_r s_{i_l} ... s_{i_1}: compose with letters from last stored to first
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    e = e.compose(rd, AffineElem::simple(rd, *it));
  return e;
}

bool is_reduced(const RootDatum& rd, const Word& w) {
  return length(rd, element_of_word(rd, w)) == (long long)w.size();
}

Word canonical_word(const RootDatum& rd, const AffineElem& e) {
  Word out;
  AffineElem cur = e;
  long long l = length(rd, cur);
  std::vector<AffineElem> simples;
  for (int i = 0; i <= rd.rank(); ++i) simples.push_back(AffineElem::simple(rd, i));
  while (l > 0) {
    bool found = false;
    for (int i = 0; i <= rd.rank(); ++i) {
      AffineRoot img = cur.act(rd, rd.affine_simple(i));
      if (!rd.affine_positive(img)) {
        out.letters.push_back(i);
        cur = cur.compose(rd, simples[i]);
        --l;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("canonical_word: no descent");
  }
  // residual has length zero, hence equals some pi_r with pi_r((0)) = omega_r
  Weight o = cur.act_origin(rd);
  int r = 0;
  if (!ivec_is_zero(o)) {
    for (int i = 0; i < rd.rank(); ++i)
      if (o[i] == 1) { r = i + 1; break; }
    if (r == 0 || !rd.in_pi_orbit(r))
      throw std::logic_error("canonical_word: residual not a pi_r");
  }
  out.pi = r;
  return out;
}

LambdaSeq lambda_sequence_of_word(const RootDatum& rd, const Word& w) {
  LambdaSeq seq;
  AffineElem v = AffineElem::identity(rd);  // s_{i_1} o ... o s_{i_{p-1}}
  for (size_t p = 0; p < w.letters.size(); ++p) {
    seq.push_back(v.act(rd, rd.affine_simple(w.letters[p])));
    v = v.compose(rd, AffineElem::simple(rd, w.letters[p]));
  }
  return seq;
}

LambdaSeq lambda_sequence(const RootDatum& rd, const Word& w) {
  if (!is_reduced(rd, w))
    throw std::invalid_argument("lambda_sequence: word not reduced");
  return lambda_sequence_of_word(rd, w);
}

Word reduce_word(const RootDatum& rd, const Word& w) {
  Word cur = w;
  // (tlaw) cancellation: delete the first letter pair whose tilde-lambda
  // entries are opposite roots.
  while (true) {
    LambdaSeq seq = lambda_sequence_of_word(rd, cur);
    bool cancelled = false;
    for (size_t p = 0; p < seq.size() && !cancelled; ++p)
      for (size_t q = p + 1; q < seq.size(); ++q)
        if (seq[q] == seq[p].negated()) {
          Word nxt;
          nxt.pi = cur.pi;
          for (size_t m = 0; m < cur.letters.size(); ++m)
            if (m != p && m != q) nxt.letters.push_back(cur.letters[m]);
          cur = nxt;
          cancelled = true;
          break;
        }
    if (!cancelled) break;
  }
  return canonical_word(rd, element_of_word(rd, cur));
}

Word word_from_lambda(const RootDatum& rd, const LambdaSeq& seq, int r) {
  // (lambdainv): alpha_{i_p} = s^1 s^2 ... s^{p-1}(alpha~^p)
  Word out;
  out.pi = r;
  AffineElem acc = AffineElem::identity(rd);
  std::vector<AffineRoot> simples = rd.affine_simple_roots();
  for (size_t p = 0; p < seq.size(); ++p) {
    AffineRoot img = acc.act(rd, seq[p]);
    int letter = -1;
    for (int i = 0; i <= rd.rank(); ++i)
      if (img == simples[i]) { letter = i; break; }
    if (letter < 0)
      throw std::invalid_argument("word_from_lambda: not a lambda-sequence");
    out.letters.push_back(letter);
    acc = acc.compose(rd, AffineElem::reflection(rd, seq[p]));
  }
  if (!is_reduced(rd, out))
    throw std::invalid_argument("word_from_lambda: resulting word not reduced");
  return out;
}

PiReduction reduce_mod_w(const RootDatum& rd, const Weight& b) {
  PiReduction red;
  red.b = b;
  int n = rd.rank();
  Weight x = b;
  IMat u = imat_identity(n);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (x[i] > 0) {
        x = rd.reflect_simple(i, x);
        u = imat_mul(w_simple_matrix(rd, i), u);
        red.u_word.push_back(i + 1);  // affine alphabet index of s_{alpha_i}
        moved = true;
        break;
      }
    }
  }
  red.u = u;
  red.b_minus = x;
  Weight y = x;
  bool m2 = true;
  while (m2) {
    m2 = false;
    for (int i = 0; i < n; ++i)
      if (y[i] < 0) { y = rd.reflect_simple(i, y); m2 = true; break; }
  }
  red.b_plus = y;
  // pi_b = b u_b^{-1}; in affine form: z -> u^{-1}(z) + u^{-1}(b_-) = u^{-1}z + b
  red.pi_elem = AffineElem{imat_inverse(u), b};
  red.pi_word = canonical_word(rd, red.pi_elem);
  return red;
}

std::vector<AffineRoot> lambda_closed(const RootDatum& rd, const Weight& b,
                                      ClosedLambdaKind kind) {
  std::vector<AffineRoot> out;
  int np = rd.num_positive();
  PiReduction red = reduce_mod_w(rd, b);
  IMat ui = imat_inverse(red.u);
  for (int k = 0; k < np; ++k) {
    Frac hbf = rd.pair_coroot(b, k);            // (b, alpha^vee), alpha > 0
    Frac hmf = rd.pair_coroot(red.b_minus, k);  // (b_-, alpha^vee)
    long long hb = hbf.num, hm = hmf.num;
    switch (kind) {
      case ClosedLambdaKind::Translation: {
        for (long long j = 0; j < hb; ++j) out.push_back({k + 1, j});
        for (long long j = 1; j <= -hb; ++j) out.push_back({-(k + 1), j});
        break;
      }
      case ClosedLambdaKind::Pi: {
        // alpha in R_-: alpha = -alpha_k, (b_-, alpha^vee) = -hm >= 0
        Weight neg = ivec_neg(rd.positive_roots()[k].omega);
        Weight pre = imat_apply(ui, neg);  // u_b^{-1}(alpha)
        int sgn = rd.root_index(pre);
        long long top = -hm;
        if (sgn > 0) {
          for (long long j = 1; j < top; ++j) out.push_back({-(k + 1), j});
        } else {
          for (long long j = 1; j <= top; ++j) out.push_back({-(k + 1), j});
        }
        break;
      }
      case ClosedLambdaKind::PiInv: {
        // all affine-positive [alpha, nu j] with -(b, alpha^vee) > j (>= 0)
        for (long long j = 0; j < -hb; ++j) out.push_back({k + 1, j});
        for (long long j = 1; j < hb; ++j) out.push_back({-(k + 1), j});
        break;
      }
      case ClosedLambdaKind::U: {
        if (hb > 0) out.push_back({k + 1, 0});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineRoot> lambda_reflection_closed(const RootDatum& rd,
                                                 int beta_idx, long long l) {
  // (lamtbe) for beta~ = [-beta, nu_beta l], beta = positive_roots[beta_idx]
  std::vector<AffineRoot> out;
  const auto& beta = rd.positive_roots()[beta_idx];
  int np = rd.num_positive();
  for (int k = 0; k < np; ++k) {
    for (int sign = +1; sign >= -1; sign -= 2) {
      // alpha = sign * alpha_k; contribute [-alpha, nu_alpha j] in R~_+
      Weight av = sign > 0 ? rd.positive_roots()[k].omega
                           : ivec_neg(rd.positive_roots()[k].omega);
      Frac c = rd.pairing(av, beta.omega) / Frac(rd.positive_roots()[k].nu);
      long long top = c.num * l;          // (alpha^vee, beta) l
      long long jmin = sign > 0 ? 1 : 0;  // positivity of [-alpha, nu j]
      for (long long j = jmin; j < top; ++j)
        out.push_back({sign > 0 ? -(k + 1) : (k + 1), j});
    }
  }
  // plus {[-alpha, (beta,alpha) l] : alpha>0, s_beta(alpha)>0, (beta,alpha)>0}
  for (int k = 0; k < np; ++k) {
    Weight av = rd.positive_roots()[k].omega;
    Frac inner = rd.pairing(av, beta.omega);
    if (inner.sign() <= 0) continue;
    Weight img = rd.reflect_root(beta_idx, av);
    if (rd.root_index(img) < 0) continue;
    Frac lev = inner * Frac(l) / Frac(rd.positive_roots()[k].nu);
    if (!lev.is_integer()) throw std::logic_error("lamtbe: bad level");
    out.push_back({-(k + 1), lev.num});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string word_json(const Word& w) {
  std::ostringstream os;
  os << "{\"pi\":" << w.pi << ",\"letters\":[";
  for (size_t i = 0; i < w.letters.size(); ++i)
    os << (i ? "," : "") << w.letters[i];
  os << "]}";
  return os.str();
}

std::string lambda_json(const LambdaSeq& seq) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ",";
    os << "[" << seq[i].idx << "," << seq[i].level << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace daha

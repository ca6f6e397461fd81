#include "daha/weylcomb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace daha {

namespace {

// vector form of an affine root: (omega-coords, affine coordinate nu*j)
std::pair<Weight, long long> vec_of(const RootDatum& rd, const AffineRoot& a) {
  return {rd.root_vector(a), rd.nu_of(a) * a.level};
}

std::optional<AffineRoot> root_of_vec(const RootDatum& rd, const Weight& x,
                                      long long zeta) {
  int idx = rd.root_index(x);
  if (!idx) return std::nullopt;
  long long nu = rd.positive_roots()[std::abs(idx) - 1].nu;
  if (zeta % nu != 0) return std::nullopt;
  return AffineRoot{idx, zeta / nu};
}

std::optional<AffineRoot> sum_root(const RootDatum& rd, const AffineRoot& a,
                                   const AffineRoot& b) {
  auto [xa, za] = vec_of(rd, a);
  auto [xb, zb] = vec_of(rd, b);
  Weight s = ivec_add(xa, xb);
  if (ivec_is_zero(s)) return std::nullopt;  // imaginary [0, Z]
  return root_of_vec(rd, s, za + zb);
}

}  // namespace

std::vector<std::pair<AffineRoot, AffineRoot>> positive_decompositions(
    const RootDatum& rd, const AffineRoot& a) {
  std::vector<std::pair<AffineRoot, AffineRoot>> out;
  auto [xa, za] = vec_of(rd, a);
  for (int k = 0; k < rd.num_positive(); ++k) {
    for (int sign = +1; sign >= -1; sign -= 2) {
      Weight xb = sign > 0 ? rd.positive_roots()[k].omega
                           : ivec_neg(rd.positive_roots()[k].omega);
      Weight xc = ivec_sub(xa, xb);
      if (ivec_is_zero(xc)) continue;
      int idxc = rd.root_index(xc);
      if (!idxc) continue;
      long long nub = rd.positive_roots()[k].nu;
      long long nuc = rd.positive_roots()[std::abs(idxc) - 1].nu;
      long long jbmin = sign > 0 ? 0 : 1;
      long long jcmin = idxc > 0 ? 0 : 1;
      for (long long jb = jbmin; nub * jb <= za - nuc * jcmin; ++jb) {
        long long rest = za - nub * jb;
        if (rest % nuc != 0) continue;
        long long jc = rest / nuc;
        if (jc < jcmin) continue;
        out.push_back({AffineRoot{sign * (k + 1), jb}, AffineRoot{idxc, jc}});
      }
    }
  }
  return out;
}

bool is_lambda_sequence(const RootDatum& rd, const LambdaSeq& seq) {
  size_t l = seq.size();
  std::map<AffineRoot, size_t> pos;
  for (size_t p = 0; p < l; ++p) {
    if (!rd.affine_positive(seq[p])) return false;
    if (pos.count(seq[p])) return false;
    pos[seq[p]] = p;
  }
  for (size_t q = 0; q < l; ++q)
    for (size_t r = q + 1; r < l; ++r) {
      auto s = sum_root(rd, seq[q], seq[r]);
      if (!s || !rd.affine_positive(*s)) continue;
      auto it = pos.find(*s);
      if (it == pos.end()) return false;  // (a)
      size_t p = it->second;
      if (!(q < p && p < r)) return false;  // (b)
    }
  for (size_t p = 0; p < l; ++p) {
    for (auto& [b, c] : positive_decompositions(rd, seq[p])) {
      bool hb = pos.count(b), hc = pos.count(c);
      if (!hb && !hc) return false;  // (c)
      if (hb != hc) {                // (d)
        size_t q = hb ? pos[b] : pos[c];
        if (!(q < p)) return false;
      }
    }
    long long jmin = seq[p].idx > 0 ? 0 : 1;
    for (long long j = jmin; j < seq[p].level; ++j) {
      auto it = pos.find(AffineRoot{seq[p].idx, j});
      if (it == pos.end()) return false;   // (e)
      if (!(it->second < p)) return false;  // (f)
    }
  }
  return true;
}

bool is_lambda_set(const RootDatum& rd, const std::vector<AffineRoot>& set) {
  std::set<AffineRoot> have(set.begin(), set.end());
  if (have.size() != set.size()) return false;
  for (auto& a : set)
    if (!rd.affine_positive(a)) return false;
  for (auto& a : set)
    for (auto& b : set) {
      if (a == b) continue;
      auto s = sum_root(rd, a, b);
      if (s && rd.affine_positive(*s) && !have.count(*s)) return false;  // (a)
    }
  for (auto& a : set) {
    for (auto& [b, c] : positive_decompositions(rd, a))
      if (!have.count(b) && !have.count(c)) return false;  // (c)
    long long jmin = a.idx > 0 ? 0 : 1;
    for (long long j = jmin; j < a.level; ++j)
      if (!have.count(AffineRoot{a.idx, j})) return false;  // (e)
  }
  return true;
}

std::vector<CoxeterMove> coxeter_moves(const RootDatum& rd, const Word& w) {
  std::vector<CoxeterMove> out;
  for (size_t p = 0; p + 1 < w.letters.size(); ++p) {
    int i = w.letters[p], j = w.letters[p + 1];
    if (i == j) continue;
    int order = rd.braid_order(i, j);
    if (order == 0) continue;  // infinite bond
    if (p + order > w.letters.size()) continue;
    bool ok = true;
    for (int k = 0; k < order; ++k)
      if (w.letters[p + k] != (k % 2 == 0 ? i : j)) { ok = false; break; }
    if (ok) out.push_back(CoxeterMove{p, order});
  }
  return out;
}

Word apply_move(const Word& w, const CoxeterMove& m) {
  Word out = w;
  int i = w.letters[m.pos], j = w.letters[m.pos + 1];
  for (int k = 0; k < m.len; ++k)
    out.letters[m.pos + k] = (k % 2 == 0) ? j : i;
  return out;
}

std::vector<TriplePositions> admissible_triples(const RootDatum& rd,
                                                const Word& w) {
  LambdaSeq seq = lambda_sequence(rd, w);
  std::vector<TriplePositions> out;
  bool g2 = rd.type() == 'G';
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b) {
      auto s = sum_root(rd, seq[a], seq[b]);
      if (!s) continue;
      for (size_t g = a + 1; g < b; ++g) {
        if (seq[g] != *s) continue;
        long long na = rd.nu_of(seq[a]), nb = rd.nu_of(seq[b]),
                  ng = rd.nu_of(seq[g]);
        bool ok = false;
        long long L = rd.nu_lng();
        if ((na == L && nb == 1 && ng == 1) || (na == 1 && nb == L && ng == 1))
          ok = L > 1;  // lng+sht=sht or sht+lng=sht
        if (rd.simply_laced() && !g2) ok = true;
        if (!g2) {
          if (na == L && nb == L && ng == L && L > 1 &&
              (rd.type() == 'B' || rd.type() == 'F'))
            ok = true;
          if (na == 1 && nb == 1 && ng == 1 &&
              (rd.type() == 'C' || rd.type() == 'F'))
            ok = true;
        } else if (na == 1 && nb == 1 && ng == 1) {
          // A2-pure-short: no long roots among rational combinations
          Weight va = rd.root_vector(seq[a]);
          Weight vb = rd.root_vector(seq[b]);
          bool pure = true;
          for (int u = -3; u <= 3 && pure; ++u)
            for (int v = -3; v <= 3 && pure; ++v) {
              if (!u && !v) continue;
              Weight comb = ivec_add(ivec_scale(u, va), ivec_scale(v, vb));
              int idx = rd.root_index(comb);
              if (idx && rd.positive_roots()[std::abs(idx) - 1].nu != 1)
                pure = false;
            }
          ok = pure;
        }
        if (ok) out.push_back(TriplePositions{a, g, b});
      }
    }
  return out;
}

namespace {

std::optional<TriplePositions> locate(const LambdaSeq& seq,
                                      const AffineRoot& a, const AffineRoot& g,
                                      const AffineRoot& b) {
  TriplePositions t;
  bool fa = false, fg = false, fb = false;
  for (size_t p = 0; p < seq.size(); ++p) {
    if (seq[p] == a) { t.alpha = p; fa = true; }
    if (seq[p] == g) { t.gamma = p; fg = true; }
    if (seq[p] == b) { t.beta = p; fb = true; }
  }
  if (fa && fg && fb) return t;
  return std::nullopt;
}

std::string word_key(const Word& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (int c : w.letters) s.push_back((char)('0' + c));
  return s;
}

// Rational row space handling for subsystem spans of affine vectors
// (omega-coordinates extended by the affine coordinate).
struct Span {
  std::vector<QVec> rows;  // reduced row-echelon basis

  bool add(QVec v) {
    for (auto& r : rows) {
      size_t lead = 0;
      while (lead < r.size() && r[lead].is_zero()) ++lead;
      if (lead < v.size() && !v[lead].is_zero()) {
        Frac f = v[lead] / r[lead];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= f * r[i];
      }
    }
    for (auto& x : v)
      if (!x.is_zero()) {
        rows.push_back(v);
        // keep rows roughly echelonized by re-sorting on leading index
        std::sort(rows.begin(), rows.end(), [](const QVec& a, const QVec& b) {
          size_t la = 0, lb = 0;
          while (la < a.size() && a[la].is_zero()) ++la;
          while (lb < b.size() && b[lb].is_zero()) ++lb;
          return la < lb;
        });
        return true;
      }
    return false;
  }
  bool contains(QVec v) const {
    for (auto& r : rows) {
      size_t lead = 0;
      while (lead < r.size() && r[lead].is_zero()) ++lead;
      if (lead < v.size() && !v[lead].is_zero()) {
        Frac f = v[lead] / r[lead];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= f * r[i];
      }
    }
    for (auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  size_t dim() const { return rows.size(); }
};

QVec affine_qvec(const RootDatum& rd, const AffineRoot& a) {
  auto [x, z] = vec_of(rd, a);
  QVec v = to_qvec(x);
  v.push_back(Frac(z));
  return v;
}

// Ambient affine roots lying in the span, with levels bounded by `maxlev`.
std::vector<AffineRoot> roots_in_span(const RootDatum& rd, const Span& s,
                                      long long maxlev) {
  std::vector<AffineRoot> out;
  for (int k = 0; k < rd.num_positive(); ++k)
    for (int sign = +1; sign >= -1; sign -= 2)
      for (long long lev = -maxlev; lev <= maxlev; ++lev) {
        AffineRoot a{sign * (k + 1), lev};
        if (!rd.affine_positive(a)) continue;
        if (s.contains(affine_qvec(rd, a))) out.push_back(a);
      }
  return out;
}

// Detect the rank-2 theorem's obstruction patterns: subsystems R' of type
// B3/C3 (7-root set) or D4 (9-root set) with
//   [beta~, alpha~] cap R'_+ = lambda_{R'}(s_gamma~).
std::vector<ObstructionPattern> detect_patterns(const RootDatum& rd,
                                                const LambdaSeq& seq,
                                                const TriplePositions& t) {
  std::vector<ObstructionPattern> found;
  const AffineRoot A = seq[t.alpha], G = seq[t.gamma], B = seq[t.beta];
  std::vector<AffineRoot> segment(seq.begin() + t.alpha,
                                  seq.begin() + t.beta + 1);
  std::set<AffineRoot> segset(segment.begin(), segment.end());
  long long maxlev = 1;
  for (auto& r : segment) maxlev = std::max(maxlev, std::abs(r.level) + 1);
  std::set<std::vector<AffineRoot>> dedupe;

  auto try_span = [&](Span s, int want_rank) {
    if ((int)s.dim() != want_rank) return;
    auto roots = roots_in_span(rd, s, maxlev + 2);
    size_t expect = want_rank == 3 ? 9 : 12;  // positive roots of B3/C3 or D4
    if (roots.size() != expect) return;
    // the positive part must be closed under addition inside the ambient
    std::set<AffineRoot> rs(roots.begin(), roots.end());
    // intersection with the segment, in segment order
    std::vector<AffineRoot> inter;
    for (auto it = segment.rbegin(); it != segment.rend(); ++it)
      if (rs.count(*it)) inter.push_back(*it);  // display order: beta~ first
    size_t need = want_rank == 3 ? 7 : 9;
    if (inter.size() != need) return;
    if (!(inter.front() == B) || !(inter.back() == A)) return;
    // intersection must be exactly lambda_{R'}(s_G):
    // delta in segment <=> (delta, G^vee) > 0
    int gk = std::abs(G.idx) - 1;
    for (auto& r : roots) {
      Weight v = rd.root_vector(r);
      Frac c = rd.pair_coroot(v, gk) * Frac(G.idx > 0 ? 1 : -1);
      bool inseg = segset.count(r) > 0;
      if ((c > Frac(0)) != inseg) return;
    }
    ObstructionPattern pat;
    pat.rank = want_rank;
    pat.roots = inter;
    if (want_rank == 3) {
      // m = 2 (C3) when the triple is short, m = 1 (B3) when long
      pat.m = rd.nu_of(G) == 1 ? 2 : 1;
      // two length classes must occur among the 9 positive roots
      std::set<long long> nus;
      for (auto& r : roots) nus.insert(rd.nu_of(r));
      if (nus.size() != 2) return;
    } else {
      pat.m = 1;
      for (auto& r : roots)
        if (rd.nu_of(r) != rd.nu_of(G)) return;
    }
    if (dedupe.insert(pat.roots).second) found.push_back(pat);
  };

  // rank-3 candidates: span{A, B, delta}
  for (auto& d : segment) {
    if (d == A || d == B) continue;
    Span s;
    s.add(affine_qvec(rd, A));
    s.add(affine_qvec(rd, B));
    s.add(affine_qvec(rd, d));
    try_span(s, 3);
  }
  // rank-4 candidates: span{A, B, delta, delta'}
  for (size_t i = 0; i < segment.size(); ++i)
    for (size_t j = i + 1; j < segment.size(); ++j) {
      const AffineRoot &d1 = segment[i], &d2 = segment[j];
      if (d1 == A || d1 == B || d2 == A || d2 == B) continue;
      Span s;
      s.add(affine_qvec(rd, A));
      s.add(affine_qvec(rd, B));
      s.add(affine_qvec(rd, d1));
      s.add(affine_qvec(rd, d2));
      try_span(s, 4);
    }
  return found;
}

}  // namespace

CollectResult collect_triple(const RootDatum& rd, const Word& w,
                             const TriplePositions& t, size_t cap) {
  CollectResult res;
  LambdaSeq seq0 = lambda_sequence(rd, w);
  auto sm = sum_root(rd, seq0[t.alpha], seq0[t.beta]);
  if (!sm || !(seq0[t.gamma] == *sm) || !(t.alpha < t.gamma) ||
      !(t.gamma < t.beta))
    throw std::invalid_argument("collect_triple: positions not a triple");
  const AffineRoot A = seq0[t.alpha], G = seq0[t.gamma], B = seq0[t.beta];
  res.patterns = detect_patterns(rd, seq0, t);

  // Success: the triple is part of a contiguous segment of rank two, i.e. a
  // window of 3, 4 or 6 consecutive roots forming the full positive system
  // of a rank-2 root subsystem.
  long long maxlev = 1;
  for (auto& r : seq0) maxlev = std::max(maxlev, std::abs(r.level) + 1);
  auto consecutive = [&](const LambdaSeq& s) {
    auto loc = locate(s, A, G, B);
    if (!loc) return false;
    size_t lo = std::min({loc->alpha, loc->gamma, loc->beta});
    size_t hi = std::max({loc->alpha, loc->gamma, loc->beta});
    for (int c : {3, 4, 6}) {
      if ((size_t)c > s.size() || hi - lo >= (size_t)c) continue;
      size_t from = hi + 1 >= (size_t)c ? hi + 1 - c : 0;
      for (size_t u = from; u <= lo && u + c <= s.size(); ++u) {
        Span span;
        for (int m = 0; m < c; ++m) span.add(affine_qvec(rd, s[u + m]));
        if (span.dim() != 2) continue;
        auto rs = roots_in_span(rd, span, maxlev + 2);
        if ((int)rs.size() != c) continue;
        std::set<AffineRoot> win(s.begin() + u, s.begin() + u + c);
        if (std::set<AffineRoot>(rs.begin(), rs.end()) == win) return true;
      }
    }
    return false;
  };

  if (consecutive(seq0)) {
    res.status = CollectStatus::AlreadyConsecutive;
    res.witness = w;
    res.visited = 1;
    return res;
  }

  std::deque<Word> queue{w};
  std::unordered_set<std::string> seen{word_key(w)};
  while (!queue.empty()) {
    if (seen.size() > cap) {
      res.status = CollectStatus::CapReached;
      res.visited = seen.size();
      return res;
    }
    Word cur = queue.front();
    queue.pop_front();
    for (auto& mv : coxeter_moves(rd, cur)) {
      Word nxt = apply_move(cur, mv);
      auto key = word_key(nxt);
      if (seen.count(key)) continue;
      seen.insert(key);
      LambdaSeq s = lambda_sequence_of_word(rd, nxt);
      if (consecutive(s)) {
        res.status = CollectStatus::Collected;
        res.witness = nxt;
        res.visited = seen.size();
        return res;
      }
      queue.push_back(nxt);
    }
  }
  res.status = CollectStatus::Exhausted;
  res.visited = seen.size();
  return res;
}

std::vector<size_t> pseudo_simple(const RootDatum& rd, const LambdaSeq& seq) {
  std::vector<size_t> out;
  // multiplicities m in rank-two subsystems are bounded by 3 (G2)
  for (size_t p = 0; p < seq.size(); ++p) {
    auto [xp, zp] = vec_of(rd, seq[p]);
    bool pseudo = true;
    for (long long m = 1; m <= 3 && pseudo; ++m) {
      Weight target = ivec_scale(m, xp);
      long long zt = m * zp;
      for (size_t q = 0; q < seq.size() && pseudo; ++q)
        for (size_t r = q + 1; r < seq.size() && pseudo; ++r) {
          auto [xq, zq] = vec_of(rd, seq[q]);
          auto [xr, zr] = vec_of(rd, seq[r]);
          if (ivec_add(xq, xr) == target && zq + zr == zt) pseudo = false;
        }
    }
    if (pseudo) out.push_back(p);
  }
  return out;
}

std::set<AffineElem> bruhat_set(const RootDatum& rd, const Word& w) {
  std::set<AffineElem> cur{w.pi == 0 ? AffineElem::identity(rd)
                                     : pi_r_element(rd, w.pi)};
  // the element is pi_r s_{i_l} ... s_{i_1}; extend subword products from
  // the pi_r end, multiplying on the right by s or skipping it
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::set<AffineElem> nxt;
    AffineElem s = AffineElem::simple(rd, *it);
    for (auto& e : cur) {
      nxt.insert(e);
      nxt.insert(e.compose(rd, s));
    }
    cur = nxt;
  }
  return cur;
}

SegmentLambda lambda_from_segment(const RootDatum& rd, const QVec& b0,
                                  const QVec& b1) {
  SegmentLambda out;
  for (int k = 0; k < rd.num_positive(); ++k) {
    for (int sign = +1; sign >= -1; sign -= 2) {
      // gamma = sign * alpha_k; crossings of (z, gamma^vee) + j = 0,
      // root in lambda iff (gamma^vee, b0) + j > 0 > (gamma^vee, b1) + j
      Frac p0 = rd.pair_coroot(b0, k) * Frac(sign);
      Frac p1 = rd.pair_coroot(b1, k) * Frac(sign);
      if (p0 == p1) continue;
      long long jlo = (Frac(0) - (p0 > p1 ? p0 : p1)).floor_ll();
      for (long long j = jlo; ; ++j) {
        Frac v0 = p0 + Frac(j), v1 = p1 + Frac(j);
        if (v0 > Frac(0) && v1 > Frac(0)) break;
        if (v0.sign() == 0 || v1.sign() == 0) {
          if (v0.sign() == 0 && v1.sign() == 0) continue;
          AffineRoot r{sign * (k + 1), j};
          if (rd.affine_positive(r)) out.on_boundary = true;
          continue;
        }
        if (v0.sign() > 0 && v1.sign() < 0) {
          AffineRoot r{sign * (k + 1), j};
          if (!rd.affine_positive(r)) continue;
          Frac tt = v0 / (v0 - v1);
          out.crossings.push_back({r, tt});
        }
      }
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const SegmentCrossing& a, const SegmentCrossing& b) {
              if (a.t != b.t) return a.t < b.t;
              if (a.root.level != b.root.level)
                return a.root.level < b.root.level;
              return a.root.idx < b.root.idx;
            });
  for (size_t i = 0; i + 1 < out.crossings.size(); ++i)
    if (out.crossings[i].t == out.crossings[i + 1].t) {
      out.degenerate = true;
      out.collisions.push_back(out.crossings[i].root);
      out.collisions.push_back(out.crossings[i + 1].root);
    }
  return out;
}

}  // namespace daha

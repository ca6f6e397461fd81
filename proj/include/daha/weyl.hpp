#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha/rootdata.hpp"

namespace daha {

// Element of the extended affine Weyl group W^ = W x P (or W x B), stored in
// affine form: the action on points is z -> w(z) + t, so an element w b'
// (w in W, b' the translation by b) has t = w(b).  On affine vectors the
// action is [x, zeta] -> [w x, zeta - (w x, t)], using that w preserves the
// bilinear form.
//
// Word convention: an element pi_r s_{i_l} ... s_{i_1} is stored as the
// letter vector {i_1, ..., i_l} (first-applied letter first) together with
// the index r.  The lambda-sequence of a reduced word lists
// lambda[p] = s_{i_1} ... s_{i_p}(alpha_{i_{p+1}}) so lambda[0] = alpha_{i_1}.
struct AffineElem {
  IMat w;     // action on weight-basis coordinates
  Weight t;   // affine shift; the translation part is b = w^{-1}(t)

  static AffineElem identity(const RootDatum& rd);
  static AffineElem simple(const RootDatum& rd, int i);         // s_i, 0..n
  static AffineElem translation(const RootDatum& rd, const Weight& t);
  static AffineElem reflection(const RootDatum& rd, const AffineRoot& a);

  AffineElem compose(const RootDatum& rd, const AffineElem& rhs) const;
  AffineElem inverse(const RootDatum& rd) const;

  AffineRoot act(const RootDatum& rd, const AffineRoot& a) const;
  QVec act_point(const RootDatum& rd, const QVec& z) const;
  Weight act_origin(const RootDatum& rd) const;  // w((0)) = w(b)
  // X-monomial transform: [b, q-exponent] -> [w b, q-exponent - (b, this->b)]
  std::pair<Weight, Frac> act_xweight(const RootDatum& rd, const Weight& x,
                                      const Frac& qexp) const;

  // translation part b = w^{-1}(t)
  Weight translation_part(const RootDatum& rd) const;

  friend bool operator==(const AffineElem& a, const AffineElem& b) {
    return a.t == b.t && a.w == b.w;
  }
  friend bool operator!=(const AffineElem& a, const AffineElem& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineElem& a, const AffineElem& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.w < b.w;
  }
};

struct Word {
  int pi = 0;                 // index r of the pi_r prefix (0 = none)
  std::vector<int> letters;   // first-applied letter first

  size_t size() const { return letters.size(); }
};

using LambdaSeq = std::vector<AffineRoot>;

long long length(const RootDatum& rd, const AffineElem& e);
std::vector<AffineRoot> lambda_set(const RootDatum& rd, const AffineElem& e);

AffineElem element_of_word(const RootDatum& rd, const Word& w);
AffineElem pi_r_element(const RootDatum& rd, int r);
bool is_reduced(const RootDatum& rd, const Word& w);

// Lexicographically least reduced word of an element (letters compared in
// application order); the deterministic canonical choice of this artifact.
Word canonical_word(const RootDatum& rd, const AffineElem& e);

// The lambda-sequence of a word via (tal); requires no positivity, entries
// of a non-reduced word may repeat or be negative (the tilde-lambda list).
LambdaSeq lambda_sequence_of_word(const RootDatum& rd, const Word& w);

// lambda-sequence of a reduced word; throws if the word is not reduced.
LambdaSeq lambda_sequence(const RootDatum& rd, const Word& w);

// Word reduction: first cancels (tlaw) pairs (a letter pair whose
// tilde-lambda entries are opposite), then emits the canonical word of the
// underlying element.
Word reduce_word(const RootDatum& rd, const Word& w);

// Recovery of the element from a lambda-sequence via (lambdainv); the pi_r
// part is a free choice.  Throws if the sequence is not a lambda-sequence.
Word word_from_lambda(const RootDatum& rd, const LambdaSeq& seq, int r);

// Reduction modulo W: b = pi_b u_b with lambda(pi_b) disjoint from R.
struct PiReduction {
  Weight b;
  Word pi_word;        // canonical reduced word of pi_b
  AffineElem pi_elem;
  IMat u;              // u_b as a matrix
  std::vector<int> u_word;  // reduced word of u_b in nonaffine letters
  Weight b_minus, b_plus;
};

PiReduction reduce_mod_w(const RootDatum& rd, const Weight& b);

// Minimal-length w in W with w(x) = target (greedy over simple reflections).
IMat w_matrix_identity(const RootDatum& rd);
IMat w_simple_matrix(const RootDatum& rd, int i);

enum class ClosedLambdaKind { Translation, Pi, PiInv, U };
std::vector<AffineRoot> lambda_closed(const RootDatum& rd, const Weight& b,
                                      ClosedLambdaKind kind);

// lambda(s_beta~) for beta~ = [-beta, nu_beta l], beta > 0, via (lamtbe).
std::vector<AffineRoot> lambda_reflection_closed(const RootDatum& rd,
                                                 int beta_idx, long long l);

std::string word_json(const Word& w);
std::string lambda_json(const LambdaSeq& seq);

}  // namespace daha

#pragma once

#include <optional>
#include <set>

#include "daha/weyl.hpp"

namespace daha {

// Decompositions of an affine root as a sum of two positive affine roots;
// used by the intrinsic lambda conditions.
std::vector<std::pair<AffineRoot, AffineRoot>> positive_decompositions(
    const RootDatum& rd, const AffineRoot& a);

// Intrinsic recognition of lambda-sequences, conditions (a)-(f), and of
// unordered lambda-sets, conditions (a),(c),(e).
bool is_lambda_sequence(const RootDatum& rd, const LambdaSeq& seq);
bool is_lambda_set(const RootDatum& rd, const std::vector<AffineRoot>& set);

// --- homogeneous Coxeter transformations -------------------------------

struct CoxeterMove {
  size_t pos = 0;  // first letter of the braid segment (in word order)
  int len = 2;     // 2, 3, 4 or 6 letters
};

std::vector<CoxeterMove> coxeter_moves(const RootDatum& rd, const Word& w);
Word apply_move(const Word& w, const CoxeterMove& m);

// --- triples and the rank-two obstruction patterns ---------------------

struct TriplePositions {
  size_t alpha = 0;  // earliest position (first applied)
  size_t gamma = 0;
  size_t beta = 0;   // latest position; values satisfy alpha~+beta~=gamma~
};

enum class CollectStatus { AlreadyConsecutive, Collected, Exhausted, CapReached };

struct ObstructionPattern {
  // 7 roots (B3/C3 pattern) or 9 roots (D4 pattern), listed in segment order.
  std::vector<AffineRoot> roots;
  int rank = 3;            // 3 or 4
  long long m = 1;         // 1 for B3, 2 for C3 (rank-3 case only)
};

struct CollectResult {
  CollectStatus status;
  Word witness;                      // collecting word when found
  size_t visited = 0;
  std::vector<ObstructionPattern> patterns;  // detected in the input word
};

// Breadth-first search over the Coxeter-move graph trying to make the three
// roots of the triple consecutive; on failure the input lambda-sequence is
// scanned for the 7-root (B3/C3) and 9-root (D4) obstruction patterns.
CollectResult collect_triple(const RootDatum& rd, const Word& w,
                             const TriplePositions& t, size_t cap = 1000000);

// All additive triples in the lambda-sequence of a reduced word whose length
// pattern is admitted by the rank-two theorem.
std::vector<TriplePositions> admissible_triples(const RootDatum& rd,
                                                const Word& w);

// Pseudo-simple positions: p such that no m >= 1 makes m*alpha~^p a sum of
// entries of the sequence; equivalently deleting letter p drops the length
// by exactly one.
std::vector<size_t> pseudo_simple(const RootDatum& rd, const LambdaSeq& seq);

// Standard Bruhat set of a reduced word (as a set of elements).
std::set<AffineElem> bruhat_set(const RootDatum& rd, const Word& w);

// --- geometric lambda-sequences from segments --------------------------

struct SegmentCrossing {
  AffineRoot root;
  Frac t;  // crossing parameter in (0,1)
};

struct SegmentLambda {
  std::vector<SegmentCrossing> crossings;  // ordered by t
  bool degenerate = false;                 // simultaneous interior crossings
  bool on_boundary = false;  // some hyperplane passes through b0 or b1
  std::vector<AffineRoot> collisions;      // simultaneous crossings, if any
};

// Consecutive intersections of the segment b0 -> b1 with affine root
// hyperplanes, ordered by the exact rational crossing parameter.
SegmentLambda lambda_from_segment(const RootDatum& rd, const QVec& b0,
                                  const QVec& b1);

}  // namespace daha

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "daha/rootdata.hpp"
#include "daha/weyl.hpp"

using namespace daha;

TEST_CASE("A1 basics") {
  auto rd = RootDatum::build('A', 1);
  CHECK(rd.num_positive() == 1);
  CHECK(rd.theta_index() == 0);
  CHECK(rd.ae_count(1) == 1);
  // (alpha, alpha) = 2, (omega, omega) = 1/2
  Weight alpha = rd.positive_roots()[0].omega;
  CHECK(rd.pairing(alpha, alpha) == Frac(2));
  Weight omega{1};
  CHECK(rd.pairing(omega, omega) == Frac(1, 2));
  CHECK(rd.m_tilde() == 2);
  // affine simple roots {[-alpha_1, 1], [alpha_1, 0]}
  auto as = rd.affine_simple_roots();
  CHECK(as[0] == AffineRoot{-1, 1});
  CHECK(as[1] == AffineRoot{1, 0});
  // infinite bond in the affine diagram
  CHECK(rd.braid_order(0, 1) == 0);
}

TEST_CASE("counts and normalization per type") {
  struct Row { char t; int n; int npos; long long ae_s, ae_l; };
  Row rows[] = {
      {'A', 2, 3, 3, 0},  {'A', 3, 6, 6, 0},   {'B', 2, 4, 2, 2},
      {'B', 3, 9, 3, 6},  {'C', 3, 9, 6, 3},   {'D', 4, 12, 12, 0},
      {'G', 2, 6, 3, 3},  {'F', 4, 24, 12, 12}, {'E', 6, 36, 36, 0},
      {'E', 8, 120, 120, 0},
  };
  for (auto& r : rows) {
    CAPTURE(r.t);
    CAPTURE(r.n);
    auto rd = RootDatum::build(r.t, r.n);
    CHECK(rd.num_positive() == r.npos);
    CHECK(rd.ae_count(1) == r.ae_s);
    if (!rd.simply_laced()) CHECK(rd.ae_count(rd.nu_lng()) == r.ae_l);
    // short roots have (a,a) = 2, long 2*nu_lng
    for (auto& pr : rd.positive_roots()) {
      Frac nn = rd.pairing(pr.omega, pr.omega);
      CHECK(nn == Frac(2 * pr.nu));
    }
    // theta: dominant short, pairing with coroots in {0,1,2}
    int th = rd.theta_index();
    CHECK(rd.positive_roots()[th].nu == 1);
    for (int k = 0; k < rd.num_positive(); ++k) {
      Frac c = rd.pair_coroot(rd.positive_roots()[th].omega, k);
      CHECK(c >= Frac(0));
      CHECK(c <= Frac(2));
      if (c == Frac(2)) CHECK(k == th);
    }
    // 2 rho_nu = sum of positive roots of that length; (rho_nu, alpha_i^vee)=1
    for (long long nu : rd.nu_values()) {
      Weight tot(rd.rank(), 0);
      for (auto& pr : rd.positive_roots())
        if (pr.nu == nu) tot = ivec_add(tot, pr.omega);
      Weight r2 = ivec_scale(2, rd.rho_nu(nu));
      CHECK(tot == r2);
    }
  }
}

TEST_CASE("B3 positive roots: 3 short (eps) and 6 long (eps_l +- eps_m)") {
  auto rd = RootDatum::build('B', 3);
  CHECK(rd.num_positive() == 9);
  int ns = 0, nl = 0;
  for (auto& pr : rd.positive_roots()) (pr.nu == 1 ? ns : nl)++;
  CHECK(ns == 3);
  CHECK(nl == 6);
  CHECK(rd.nu_lng() == 2);
}

TEST_CASE("G2 k-heights (alpha^vee, rho_k) pattern") {
  auto rd = RootDatum::build('G', 2);
  // expected (cs, cl) coefficients of (alpha^vee, rho_k) = cs k_s + cl k_l:
  // short a1: (1,0); short a1+a2: (1,3); short 2a1+a2: (2,3);
  // long a2: (0,1); long 3a1+a2: (1,1); long 3a1+2a2: (1,2)
  std::map<IVec, std::pair<long long, long long>> want = {
      {{1, 0}, {1, 0}}, {{1, 1}, {1, 3}}, {{2, 1}, {2, 3}},
      {{0, 1}, {0, 1}}, {{3, 1}, {1, 1}}, {{3, 2}, {1, 2}},
  };
  for (auto& pr : rd.positive_roots()) {
    auto it = want.find(pr.alpha);
    REQUIRE(it != want.end());
    // (alpha^vee, rho_k) = ks (alpha^vee, rho_s) + kl (alpha^vee, rho_l)
    Frac cs = rd.pairing(pr.omega, rd.rho_nu(1)) / Frac(pr.nu);
    Frac cl = rd.pairing(pr.omega, rd.rho_nu(3)) / Frac(pr.nu);
    CHECK(cs == Frac(it->second.first));
    CHECK(cl == Frac(it->second.second));
  }
}

TEST_CASE("pairing defining properties") {
  for (auto spec : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2},
                    {'F', 4}, {'E', 8}}) {
    auto rd = RootDatum::build(spec.first, spec.second);
    for (int i = 0; i < rd.rank(); ++i) {
      Weight wi(rd.rank(), 0);
      wi[i] = 1;
      for (int k = 0; k < rd.num_positive(); ++k) {
        // (omega_i, alpha_j^vee) = delta_ij for simple alpha_j
        if (rd.positive_roots()[k].height == 1) {
          int j = -1;
          for (int c = 0; c < rd.rank(); ++c)
            if (rd.positive_roots()[k].alpha[c] == 1) j = c;
          CHECK(rd.pair_coroot(wi, k) == Frac(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("(rho, theta^vee) = 29 for E8") {
  auto rd = RootDatum::build('E', 8);
  // derived oracle: sum of the simple-root coefficients of theta^vee
  // (theta is short=long here), i.e. the coroot height of theta
  long long cht = rd.positive_roots()[rd.theta_index()].cht;
  CHECK(cht == 29);
  CHECK(rd.pair_coroot(rd.rho(), rd.theta_index()) == Frac(29));
}

TEST_CASE("affine action of s_0 and linear action on affine roots") {
  auto rd = RootDatum::build('A', 1);
  // s_0 on [alpha_1, 0] -> [-alpha_1, 2]
  AffineRoot a1{1, 0};
  CHECK(rd.act_simple(0, a1) == AffineRoot{-1, 2});
  // s_i(alpha_i) = -alpha_i
  CHECK(rd.act_simple(1, a1) == AffineRoot{-1, 0});
  // s_0((0)) = theta as a point
  QVec zero{Frac(0)};
  QVec img = rd.act_simple_point(0, zero);
  CHECK(img[0] == Frac(2));  // theta = alpha = 2 omega
}

TEST_CASE("reflection words have odd length (levels <= 3, rank <= 3)") {
  for (auto spec : {std::pair<char, int>{'A', 1}, {'A', 2}, {'B', 2},
                    {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}}) {
    auto rd = RootDatum::build(spec.first, spec.second);
    for (int k = 0; k < rd.num_positive(); ++k)
      for (long long j = -3; j <= 3; ++j) {
        AffineRoot a{k + 1, j};
        if (!rd.affine_positive(a)) a = a.negated();
        auto e = AffineElem::reflection(rd, a);
        CHECK(length(rd, e) % 2 == 1);
      }
  }
}

// Sum of two long roots is long; sum of two short roots is long exactly
// when their inner product is >= 0 (orthogonal outside G2, also acute
// inside G2 subsystems).  Mixed-length sums can land in either length.
TEST_CASE("length of root sums") {
  for (auto spec : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3},
                    {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto rd = RootDatum::build(spec.first, spec.second);
    for (int a = 0; a < rd.num_positive(); ++a)
      for (int b = 0; b < rd.num_positive(); ++b) {
        Weight s = ivec_add(rd.positive_roots()[a].omega,
                            rd.positive_roots()[b].omega);
        int idx = rd.root_index(s);
        if (idx <= 0) continue;
        long long nu = rd.positive_roots()[idx - 1].nu;
        long long na = rd.positive_roots()[a].nu, nb = rd.positive_roots()[b].nu;
        Frac inner = rd.pairing(rd.positive_roots()[a].omega,
                                rd.positive_roots()[b].omega);
        if (na == rd.nu_lng() && nb == rd.nu_lng()) CHECK(nu == rd.nu_lng());
        if (na == 1 && nb == 1) {
          if (inner >= Frac(0))
            CHECK(nu == rd.nu_lng());
          else
            CHECK(nu == 1);
        }
      }
  }
}

TEST_CASE("pi orbit and minuscule weights") {
  auto a2 = RootDatum::build('A', 2);
  CHECK(a2.pi_orbit() == std::vector<int>{0, 1, 2});
  auto b2 = RootDatum::build('B', 2);
  CHECK(b2.pi_orbit().size() == 2);
  auto g2 = RootDatum::build('G', 2);
  CHECK(g2.pi_orbit() == std::vector<int>{0});
  auto f4 = RootDatum::build('F', 4);
  CHECK(f4.pi_orbit() == std::vector<int>{0});
  auto e8 = RootDatum::build('E', 8);
  CHECK(e8.pi_orbit() == std::vector<int>{0});
}

TEST_CASE("lace counts on the affine diagram (arrows reversed from coroot diagram)") {
  auto b2 = RootDatum::build('B', 2);
  // affine B2 = C2^(1)-like diagram: 0 -- 1 double bond, 1 -- 2 double bond
  CHECK(b2.braid_order(1, 2) == 4);
  CHECK(b2.braid_order(0, 1) == 4);
  CHECK(b2.braid_order(0, 2) == 2);
  auto a2 = RootDatum::build('A', 2);
  CHECK(a2.braid_order(0, 1) == 3);
  CHECK(a2.braid_order(0, 2) == 3);
}

TEST_CASE("json output is stable") {
  auto rd = RootDatum::build('A', 1);
  CHECK(rd.json() ==
        "{\"schema\":\"daha.rootdatum.v1\",\"type\":\"A\",\"rank\":1,"
        "\"lattice\":\"P\",\"nu_lng\":1,\"m_tilde\":2,\"theta\":0,"
        "\"positive_roots\":[{\"alpha\":[1],\"nu\":1}],\"pi_orbit\":[0,1]}");
}

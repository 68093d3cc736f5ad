#include "spinspec/verify.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>

#include "spinspec/io.hpp"
#include "spinspec/liealg.hpp"
#include "spinspec/matterscan.hpp"
#include "spinspec/repcat.hpp"
#include "spinspec/rwegen.hpp"
#include "spinspec/special.hpp"
#include "spinspec/spectral.hpp"

namespace spinspec {

namespace {

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<RepLabel> reps_up_to(std::int64_t two_l_max, std::int64_t two_ldot_max) {
  std::vector<RepLabel> reps;
  for (std::int64_t a = 0; a <= two_l_max; ++a)
    for (std::int64_t b = 0; b <= two_ldot_max; ++b) reps.push_back(RepLabel::from_twice(a, b));
  return reps;
}

GaussSurd i_unit() { return GaussSurd::i_times(Surd(Rational(1))); }

// ---- exactnum ----

void check_surd_float_agreement() {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> num(-60, 60), den(1, 12), rad(0, 120);
  for (int k = 0; k < 100000; ++k) {
    Surd a(Rational(num(rng), den(rng)), rad(rng));
    Surd b(Rational(num(rng), den(rng)), rad(rng));
    double lhs = (a * b).to_double();
    double rhs = a.to_double() * b.to_double();
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    require(std::abs(lhs - rhs) <= 1e-12 * scale,
            "surd product float mismatch at " + a.to_string() + " * " + b.to_string());
  }
}

void check_root_reexpansion() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> tw(-6, 6), extra(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    int roots = static_cast<int>(rng() % 5);
    for (int k = 0; k < roots; ++k) p = p * RationalPolynomial::linear_root(Rational(tw(rng), 2));
    // Occasionally tack on a grid-root-free quadratic factor.
    if (rng() % 3 == 0)
      p = p * RationalPolynomial({Rational(1), extra(rng), Rational(1)});
    if (p.degree() < 1) continue;
    GridRoots gr = poly_halfint_roots(p);
    RationalPolynomial rebuilt = gr.remainder;
    for (const auto& [root, mult] : gr.roots)
      for (int k = 0; k < mult; ++k)
        rebuilt = rebuilt * RationalPolynomial::linear_root(root.to_rational());
    require(rebuilt == p, "re-expansion mismatch for " + p.to_string());
  }
}

void check_halfint_embedding() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> tw(-2000, 2000);
  for (int k = 0; k < 100000; ++k) {
    HalfInt a = HalfInt::from_twice(tw(rng)), b = HalfInt::from_twice(tw(rng));
    require((a + b).to_rational() == a.to_rational() + b.to_rational(), "halfint add mismatch");
    require((a < b) == (a.to_rational() < b.to_rational()), "halfint order mismatch");
  }
}

// ---- repcat ----

void check_catalog_identities() {
  // Every representation with degree <= 400.
  for (std::int64_t tl = 0; tl < 400; ++tl)
    for (std::int64_t td = 0; (tl + 1) * (td + 1) <= 400; ++td) {
      RepLabel rep = RepLabel::from_twice(tl, td);
      std::int64_t dim_sum = 0;
      for (const auto& s : su2_restriction(rep)) dim_sum += s.twice + 1;
      require(dim_sum == rep.degree(), "su2 dimension sum failed for " + rep.to_string());
    }
  require(RepLabel::from_twice(30, 29).degree() == 930, "degree(15,29/2) != 930");
  require(RepLabel::from_twice(7, 6).degree() == 56, "degree(7/2,3) != 56");
}

void check_chain_structure() {
  for (const auto& rep : reps_up_to(8, 8)) {
    SpinChain c = chain(rep);
    SpinChain cswap = chain(rep.swapped());
    require(c.links.size() == cswap.links.size(), "chain length mismatch under swap");
    for (std::size_t k = 0; k < c.links.size(); ++k)
      require(c.links[k] == cswap.links[c.links.size() - 1 - k],
              "chain reversal mismatch for " + rep.to_string());
    // Fixed weight, spins stepping by 1 from l-ldot to ldot-l.
    std::int64_t w = rep.weight().twice;
    std::int64_t spin = rep.spin().twice;
    for (std::size_t k = 0; k < c.links.size(); ++k) {
      require(c.links[k].weight().twice == w, "weight drifts along chain");
      std::int64_t expect = spin + 2 * static_cast<std::int64_t>(k) * (spin <= 0 ? 1 : -1);
      require(c.links[k].spin().twice == expect, "spin sequence broken for " + rep.to_string());
    }
  }
}

void check_clifford_table() {
  for (std::int64_t p = 0; p <= 8; ++p)
    for (std::int64_t q = 0; p + q <= 8; ++q) {
      CliffordClass c = classify_clifford(p, q);
      CliffordClass shifted = classify_clifford(p + 8, q);
      require(c.ring == shifted.ring && c.charge_class == shifted.charge_class,
              "classification must depend on (p-q) mod 8 only");
    }
  require(classify_clifford(1, 3).ring == CliffordRing::H, "(1,3) should be ring H");
  require(classify_clifford(0, 3).ring == CliffordRing::HH, "(0,3) should be ring H+H");
  require(classify_clifford(2, 0).charge_class == ChargeClass::truly_neutral,
          "(2,0) should be truly neutral");
}

void check_cells() {
  for (const auto& rep : reps_up_to(40, 40)) {
    CellIndex ci = cell_index(rep);
    require(ci.boundary_distance.twice >= 0 && ci.boundary_distance.twice < 8,
            "boundary distance out of [0,4) for " + rep.to_string());
  }
  require(cell_index(RepLabel::from_twice(30, 29)).cell == 8, "(15,29/2) should sit in cell 8");
}

// ---- liealg ----

// All 15 relations of the A/B commutator table.
void check_com1(const RepLabel& rep) {
  LorentzAB g = ab_from_xy(envelope_xy(rep));
  const auto& A = g.a;
  const auto& B = g.b;
  auto eq = [&](const OperatorMatrix& lhs, const OperatorMatrix& rhs, const char* tag) {
    require(lhs == rhs, std::string("relation ") + tag + " failed for " + rep.to_string());
  };
  eq(commutator(A[0], A[1]), A[2], "[A1,A2]=A3");
  eq(commutator(A[1], A[2]), A[0], "[A2,A3]=A1");
  eq(commutator(A[2], A[0]), A[1], "[A3,A1]=A2");
  eq(commutator(B[0], B[1]), A[2].scaled(GaussSurd(Surd(Rational(-1)))), "[B1,B2]=-A3");
  eq(commutator(B[1], B[2]), A[0].scaled(GaussSurd(Surd(Rational(-1)))), "[B2,B3]=-A1");
  eq(commutator(B[2], B[0]), A[1].scaled(GaussSurd(Surd(Rational(-1)))), "[B3,B1]=-A2");
  for (int k = 0; k < 3; ++k) {
    std::string tag = "[A" + std::to_string(k + 1) + ",B" + std::to_string(k + 1) + "]=0";
    require(commutator(A[k], B[k]).is_zero(), tag + " failed for " + rep.to_string());
  }
  eq(commutator(A[0], B[1]), B[2], "[A1,B2]=B3");
  eq(commutator(A[0], B[2]), B[1].scaled(GaussSurd(Surd(Rational(-1)))), "[A1,B3]=-B2");
  eq(commutator(A[1], B[2]), B[0], "[A2,B3]=B1");
  eq(commutator(A[1], B[0]), B[2].scaled(GaussSurd(Surd(Rational(-1)))), "[A2,B1]=-B3");
  eq(commutator(A[2], B[0]), B[1], "[A3,B1]=B2");
  eq(commutator(A[2], B[1]), B[0].scaled(GaussSurd(Surd(Rational(-1)))), "[A3,B2]=-B1");
}

void check_com2(const RepLabel& rep) {
  EnvelopeXY env = envelope_xy(rep);
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      OperatorMatrix xx = commutator(env.x[k], env.x[l]);
      OperatorMatrix yy = commutator(env.y[k], env.y[l]);
      OperatorMatrix xsum(env.x[0].dim()), ysum(env.y[0].dim());
      for (int m = 0; m < 3; ++m) {
        if (eps[k][l][m] == 0) continue;
        GaussSurd f = GaussSurd::i_times(Surd(Rational(eps[k][l][m])));
        xsum = xsum + env.x[m].scaled(f);
        ysum = ysum + env.y[m].scaled(f);
      }
      require(xx == xsum, "[Xk,Xl]=i eps Xm failed for " + rep.to_string());
      require(yy == ysum, "[Yk,Yl]=i eps Ym failed for " + rep.to_string());
      require(commutator(env.x[k], env.y[l]).is_zero(),
              "[X,Y]=0 failed for " + rep.to_string());
    }
}

void check_ladder_relations(const RepLabel& rep) {
  EnvelopeXY env = envelope_xy(rep);
  OperatorMatrix xp = env.x[0] + env.x[1].scaled(i_unit());
  OperatorMatrix xm = env.x[0] - env.x[1].scaled(i_unit());
  require(commutator(env.x[2], xp) == xp, "[X3,X+]=X+ failed for " + rep.to_string());
  require(commutator(env.x[2], xm) == xm.scaled(GaussSurd(Surd(Rational(-1)))),
          "[X3,X-]=-X- failed for " + rep.to_string());
  require(commutator(xp, xm) == env.x[2].scaled(GaussSurd(Surd(Rational(2)))),
          "[X+,X-]=2X3 failed for " + rep.to_string());
  OperatorMatrix yp = env.y[0] + env.y[1].scaled(i_unit());
  OperatorMatrix ym = env.y[0] - env.y[1].scaled(i_unit());
  require(commutator(yp, ym) == env.y[2].scaled(GaussSurd(Surd(Rational(2)))),
          "[Y+,Y-]=2Y3 failed for " + rep.to_string());
}

void check_hermiticity_conventions(const RepLabel& rep) {
  EnvelopeXY env = envelope_xy(rep);
  LorentzAB g = ab_from_xy(env);
  for (int k = 0; k < 3; ++k) {
    require(env.x[k].is_hermitian() && env.y[k].is_hermitian(),
            "X, Y must be Hermitian for " + rep.to_string());
    require(g.a[k].adjoint() == g.a[k].scaled(GaussSurd(Surd(Rational(-1)))),
            "A must be anti-Hermitian for " + rep.to_string());
    // B = Y - X of Hermitian operators is Hermitian.
    require(g.b[k].is_hermitian(), "B must be Hermitian for " + rep.to_string());
  }
}

void check_liealg_suite() {
  for (const auto& rep : reps_up_to(5, 5)) {
    check_com1(rep);
    check_com2(rep);
    check_ladder_relations(rep);
    check_hermiticity_conventions(rep);
  }
}

// ---- rwegen ----

std::vector<RepLabel> reps_degree_up_to(std::int64_t max_degree) {
  std::vector<RepLabel> reps;
  for (std::int64_t tl = 0; tl < max_degree; ++tl)
    for (std::int64_t td = 0; (tl + 1) * (td + 1) <= max_degree; ++td)
      reps.push_back(RepLabel::from_twice(tl, td));
  return reps;
}

void check_lambda_hermiticity() {
  CoefficientSet c1;
  CoefficientSet csurd = CoefficientSet::uniform(Surd(Rational(1, 3), 5));
  for (const auto& rep : reps_degree_up_to(64)) {
    for (int j = 1; j <= 3; ++j)
      for (bool dual : {false, true}) {
        require(build_lambda(rep, j, c1, dual).entries.is_hermitian(),
                "Lambda not Hermitian for " + rep.to_string());
        require(build_lambda(rep, j, csurd, dual).entries.is_hermitian(),
                "Lambda not Hermitian at surd coefficient for " + rep.to_string());
      }
  }
}

void check_commut_relations() {
  CoefficientSet c1;
  for (const auto& rep : reps_up_to(5, 5)) {
    if (rep.is_edge()) continue;  // the two-index tables govern interior nodes
    auto lam = build_lambda_triple(rep, c1);
    auto a = commut_generators(rep);
    require(commutator(a[1], lam[2].entries) == lam[0].entries,
            "[A2,L3]=L1 failed for " + rep.to_string());
    require(commutator(a[0], lam[2].entries) ==
                lam[1].entries.scaled(GaussSurd(Surd(Rational(-1)))),
            "[A1,L3]=-L2 failed for " + rep.to_string());
    EnvelopeXY env = envelope_xy(rep);
    OperatorMatrix xm = env.x[0] - env.x[1].scaled(i_unit());
    OperatorMatrix xp = env.x[0] + env.x[1].scaled(i_unit());
    require(commutator(commutator(lam[2].entries, xm), xp) ==
                lam[2].entries.scaled(GaussSurd(Surd(Rational(2)))),
            "[[L3,X-],X+]=2L3 failed for " + rep.to_string());
    OperatorMatrix ym = env.y[0] - env.y[1].scaled(i_unit());
    OperatorMatrix yp = env.y[0] + env.y[1].scaled(i_unit());
    require(commutator(commutator(lam[2].entries, ym), yp) ==
                lam[2].entries.scaled(GaussSurd(Surd(Rational(2)))),
            "[[L3,Y-],Y+]=2L3 failed for " + rep.to_string());
  }
}

void check_lambda3_kronecker() {
  CoefficientSet c1;
  for (const auto& rep : reps_up_to(6, 6)) {
    if (rep.is_edge()) continue;
    LambdaMatrix lam3 = build_lambda(rep, 3, c1);
    HelicityBasis b = basis(rep);
    require(lam3.entries.is_diagonal(), "Lambda_3 must be diagonal");
    for (int k = 0; k < lam3.entries.dim(); ++k) {
      auto [m, md] = b.order[static_cast<std::size_t>(k)];
      require(lam3.entries.at(k, k) == GaussSurd(Surd(m * md)),
              "Lambda_3 diagonal is not m*mdot at " + rep.to_string());
    }
    // Dual Lambda_3 coincides entrywise, so profiles match trivially;
    // Lambda_1, Lambda_2 flip sign.
    auto fwd = build_lambda_triple(rep, c1, false);
    auto dual = build_lambda_triple(rep, c1, true);
    require(dual[2].entries == fwd[2].entries, "starred Lambda_3 must equal Lambda_3");
    require(dual[0].entries == fwd[0].entries.scaled(GaussSurd(Surd(Rational(-1)))),
            "starred Lambda_1 must be -Lambda_1");
    require(dual[1].entries == fwd[1].entries.scaled(GaussSurd(Surd(Rational(-1)))),
            "starred Lambda_2 must be -Lambda_2");
  }
}

void check_alpha() {
  auto alpha = mo_alpha();
  for (const auto& a : alpha) require(a.is_hermitian(), "alpha matrices must be Hermitian");
  // (v.alpha)w = -i (v x w) on all basis pairs.
  auto cx = [&](const OperatorMatrix& m, int r, int c) {
    return std::complex<double>(m.at(r, c).real_part(), m.at(r, c).imag_part());
  };
  for (int vi = 0; vi < 3; ++vi)
    for (int wj = 0; wj < 3; ++wj) {
      std::complex<double> lhs[3], rhs[3] = {};
      for (int r = 0; r < 3; ++r) lhs[r] = cx(alpha[static_cast<std::size_t>(vi)], r, wj);
      // cross product e_vi x e_wj
      double cross[3] = {0, 0, 0};
      cross[(vi + 2) % 3] += (wj == (vi + 1) % 3) ? 1.0 : 0.0;
      cross[(vi + 1) % 3] -= (wj == (vi + 2) % 3) ? 1.0 : 0.0;
      for (int r = 0; r < 3; ++r) rhs[r] = std::complex<double>(0.0, -1.0) * cross[r];
      for (int r = 0; r < 3; ++r)
        require(std::abs(lhs[r] - rhs[r]) < 1e-15, "alpha cross-product identity failed");
    }
  require(pauli_check().ok, "Pauli coincidence at c=2 failed");
  require(!pauli_check(Surd(Rational(1))).ok, "Pauli check must fail at c=1");
}

void check_bs_systems() {
  // Dirac doublet: two links, the (0,1/2) one in the dual role, masses equal.
  RweSystem dirac = assemble_system(chain(RepLabel::from_twice(1, 0)), Rational(1),
                                    CoefficientSet::uniform(Surd(Rational(2))));
  require(dirac.links.size() == 2, "Dirac chain must have two links");
  for (const auto& link : dirac.links) {
    require(link.link_mass == Rational(1, 2), "Dirac link mass must be mu0/2 by the mass formula");
    require(link.dual_role == (link.rep.l < link.rep.ldot), "Dirac dual role misassigned");
    require(link.forward[0].entries == link.dual[0].entries,
            "edge starred matrices coincide with unstarred");
  }
  // Quadruplet masses per link from the mass formula.
  RweSystem quad =
      assemble_system(chain(RepLabel::from_twice(0, 3)), Rational(1), CoefficientSet{});
  require(quad.links.size() == 4, "quadruplet must have four links");
  require(quad.links[0].link_mass == Rational(1) && quad.links[3].link_mass == Rational(1),
          "edge links of the quadruplet carry mass mu0");
  require(quad.links[1].link_mass == Rational(3, 2) && quad.links[2].link_mass == Rational(3, 2),
          "middle links of the quadruplet carry mass 3/2 mu0");
  int duals = 0;
  for (const auto& link : quad.links) duals += link.dual_role ? 1 : 0;
  require(duals == 2, "quadruplet splits into two forward and two dual equations");
}

// ---- spectral ----

void check_edge_profiles() {
  CoefficientSet c1;
  for (std::int64_t two_l = 1; two_l <= 12; ++two_l) {
    for (int j = 1; j <= 3; ++j) {
      LambdaMatrix lam = build_lambda(RepLabel::from_twice(two_l, 0), j, c1);
      DegeneracyProfile prof = profile(lam);
      require(prof.distinct() == static_cast<int>(two_l) + 1,
              "edge spectrum must have 2l+1 distinct eigenvalues");
      for (std::int64_t tw = -two_l; tw <= two_l; tw += 2) {
        auto it = prof.entries.find(Rational(tw, 2));
        require(it != prof.entries.end() && it->second == 1,
                "edge spectrum must be -l..l simple (2l=" + std::to_string(two_l) + ")");
      }
    }
  }
}

void check_interior_profiles() {
  CoefficientSet c1;
  for (const auto& rep : reps_degree_up_to(64)) {
    if (rep.is_edge()) continue;
    LambdaMatrix lam3 = build_lambda(rep, 3, c1);
    DegeneracyProfile prof = profile(lam3);
    require(prof.total() == rep.degree(), "profile must sum to the degree");
    require(prof.negation_symmetric(), "profile must be negation symmetric");
    for (const auto& [eig, mult] : prof.entries)
      if (!eig.is_zero())
        require(mult >= 2, "non-zero eigenvalue of interior Lambda_3 must be at least twofold");
    // charpoly = prod (x - m*mdot*c); the expanded coefficients of larger
    // blocks leave the 128-bit range, so the identity is checked up to 36.
    if (rep.degree() <= 36) {
      RationalPolynomial cp = charpoly_exact(lam3);
      RationalPolynomial expected = RationalPolynomial::constant(Rational(1));
      for (const auto& [m, md] : basis(rep).order)
        expected = expected * RationalPolynomial::linear_root(m * md);
      require(cp == expected, "Lambda_3 charpoly must be prod(x - m*mdot)");
    }
  }
}

void check_numeric_vs_exact() {
  CoefficientSet c1;
  for (std::int64_t two_l = 1; two_l <= 8; ++two_l)
    for (int j = 1; j <= 3; ++j) {
      LambdaMatrix lam = build_lambda(RepLabel::from_twice(two_l, 0), j, c1);
      DegeneracyProfile nume = spectrum_numeric(lam.entries, 1e-7);
      DegeneracyProfile exact = profile(lam);
      require(nume.entries == exact.entries, "numeric and exact profiles disagree");
    }
}

// ---- special ----

void check_hsf_trivial() {
  HsfParams p;
  p.rho = 0.7;
  p.l0 = HalfInt::whole(2);
  p.m = HalfInt::whole(0);
  p.n = HalfInt::whole(0);
  std::complex<double> v = hyperspherical_m(p);
  require(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-14, "hsf(0,0;theta=tau=0) must be 1");
  p.m = HalfInt::whole(1);
  require(std::abs(hyperspherical_m(p)) < 1e-14, "hsf(m!=n;theta=tau=0) must vanish");
}

void check_terminating_2f1_exact() {
  // theta-side polynomial cases against exact rational evaluation.
  for (std::int64_t two_l0 = 0; two_l0 <= 6; ++two_l0)
    for (std::int64_t two_m = -two_l0; two_m <= two_l0; two_m += 2)
      for (std::int64_t two_t = -two_l0; two_t <= two_m; two_t += 2) {
        Rational z(-3, 7);
        Rational sum(0), term(1);
        std::int64_t a2 = two_m - two_l0, b2 = -two_t - two_l0, c2 = two_m - two_t + 2;
        sum += term;
        for (long k = 0; k < 64; ++k) {
          Rational ak = Rational(a2, 2) + Rational(k), bk = Rational(b2, 2) + Rational(k);
          if (ak.is_zero() || bk.is_zero()) break;
          term = term * ak * bk / ((Rational(c2, 2) + Rational(k)) * Rational(k + 1)) * z;
          sum += term;
        }
        std::complex<double> got =
            gauss_2f1({0.5 * a2, 0.0}, {0.5 * b2, 0.0}, {0.5 * c2, 0.0}, {z.to_double(), 0.0});
        require(std::abs(got.real() - sum.to_double()) < 1e-12 * std::max(1.0, std::abs(sum.to_double())),
                "terminating 2F1 does not match exact rational evaluation");
        require(std::abs(got.imag()) < 1e-14, "terminating 2F1 must be real here");
      }
}

void check_hsf_order_independence() {
  HsfParams p;
  p.rho = 1.3;
  p.l0 = HalfInt::whole(2);
  p.m = HalfInt::whole(1);
  p.n = HalfInt::whole(-1);
  p.theta = 0.9;
  p.tau = 0.8;
  // Sum of t-terms must agree whichever direction it is accumulated in.
  std::vector<std::complex<double>> terms = hyperspherical_terms(p);
  std::complex<double> fwd(0.0, 0.0), rev(0.0, 0.0);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    fwd += terms[k];
    rev += terms[terms.size() - 1 - k];
  }
  require(std::abs(fwd - rev) <= 1e-10 * std::max(1e-300, std::abs(fwd)),
          "t-sum depends on summation order");
  // Continuity probe in theta and tau.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> th(0.05, 2.9), ta(0.0, 2.0);
  for (int k = 0; k < 10; ++k) {
    HsfParams r = p;
    r.theta = th(rng);
    r.tau = ta(rng);
    double h = 1e-6;
    HsfParams rp = r;
    rp.theta += h;
    double delta = std::abs(hyperspherical_m(rp) - hyperspherical_m(r));
    require(delta < 1e-3, "hsf jumps under a 1e-6 theta step");
  }
}

// ---- matterscan ----

void check_census() {
  CensusReport c = proton_census();
  require(c.consistency_sum == 930, "census multiplicities must sum to 930");
  require(c.distinct_count == 329, "census distinct count must be 329");
  require(c.multiplicity_histogram.at(8) == 4 && c.multiplicity_histogram.at(6) == 18 &&
              c.multiplicity_histogram.at(4) == 74 && c.multiplicity_histogram.at(2) == 232,
          "census histogram deviates from 4/18/74/232");
  require(c.classes.at(30) == std::vector<Rational>{Rational(0)}, "eigenvalue 0 must be 30-fold");
}

void check_stability_monotone() {
  double prev_degree = 0.0;
  for (double ratio = 2.5; ratio <= 4000.0; ratio *= 1.17) {
    StabilityResult r = stability_search(ratio);
    require(static_cast<double>(r.degree) >= prev_degree,
            "stability search must be monotone in the ratio");
    prev_degree = static_cast<double>(r.degree);
  }
}

// ---- io ----

void check_io_roundtrip_and_determinism() {
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(2, 1), 3, CoefficientSet{});
  SpectrumReport rep = classify(lam);
  json j1 = to_json(rep);
  json j2 = to_json(spectrum_from_json(j1));
  require(dump(j1) == dump(j2), "spectrum report JSON round-trip is not exact");

  CensusReport c = proton_census();
  require(dump(to_json(c)) == dump(to_json(census_from_json(to_json(c)))),
          "census JSON round-trip is not exact");

  auto tmp = std::filesystem::temp_directory_path() / "spinspec_verify_mm.mtx";
  write_matrix_market(build_lambda(RepLabel::from_twice(2, 0), 1, CoefficientSet{}).entries, tmp);
  std::ifstream in1(tmp, std::ios::binary);
  std::stringstream s1;
  s1 << in1.rdbuf();
  write_matrix_market(build_lambda(RepLabel::from_twice(2, 0), 1, CoefficientSet{}).entries, tmp);
  std::ifstream in2(tmp, std::ios::binary);
  std::stringstream s2;
  s2 << in2.rdbuf();
  require(s1.str() == s2.str() && !s1.str().empty(), "matrix market export must be byte-stable");
  std::filesystem::remove(tmp);
  std::filesystem::remove(tmp.string() + ".exact.json");
}

struct Suite {
  const char* name;
  void (*fn)();
};

const Suite kSuites[] = {
    {"exactnum.surd_float_agreement", check_surd_float_agreement},
    {"exactnum.root_reexpansion", check_root_reexpansion},
    {"exactnum.halfint_embedding", check_halfint_embedding},
    {"repcat.catalog_identities", check_catalog_identities},
    {"repcat.chain_structure", check_chain_structure},
    {"repcat.clifford_table", check_clifford_table},
    {"repcat.cells", check_cells},
    {"liealg.algebra_relations", check_liealg_suite},
    {"rwegen.hermiticity", check_lambda_hermiticity},
    {"rwegen.commutator_construction", check_commut_relations},
    {"rwegen.lambda3_kronecker", check_lambda3_kronecker},
    {"rwegen.alpha_and_pauli", check_alpha},
    {"rwegen.chain_systems", check_bs_systems},
    {"spectral.edge_profiles", check_edge_profiles},
    {"spectral.interior_profiles", check_interior_profiles},
    {"spectral.numeric_vs_exact", check_numeric_vs_exact},
    {"special.trivial_values", check_hsf_trivial},
    {"special.terminating_2f1", check_terminating_2f1_exact},
    {"special.determinism_continuity", check_hsf_order_independence},
    {"matterscan.census", check_census},
    {"matterscan.stability_monotone", check_stability_monotone},
    {"io.roundtrip_determinism", check_io_roundtrip_and_determinism},
};

}  // namespace

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const Suite& s : kSuites) {
    CheckResult r;
    r.name = s.name;
    try {
      s.fn();
      r.ok = true;
    } catch (const Failure& f) {
      r.ok = false;
      r.detail = f.detail;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spinspec

#include "spinspec/rwegen.hpp"

namespace spinspec {

HelicityBasis basis(const RepLabel& rep) {
  HelicityBasis b;
  b.rep = rep;
  b.order.reserve(static_cast<std::size_t>(rep.degree()));
  for (std::int64_t td = rep.ldot.twice; td >= -rep.ldot.twice; td -= 2)
    for (std::int64_t tm = rep.l.twice; tm >= -rep.l.twice; tm -= 2)
      b.order.emplace_back(HalfInt::from_twice(tm), HalfInt::from_twice(td));
  return b;
}

int basis_index(const RepLabel& rep, HalfInt m, HalfInt mdot) {
  if (m.abs() > rep.l || mdot.abs() > rep.ldot)
    throw std::domain_error("state outside representation " + rep.to_string());
  std::int64_t row_d = (rep.ldot.twice - mdot.twice) / 2;
  std::int64_t row_m = (rep.l.twice - m.twice) / 2;
  return static_cast<int>(row_d * (rep.l.twice + 1) + row_m);
}

Surd CoefficientSet::get(const RepLabel& rep, int offset) const {
  auto it = values_.find({rep.l.twice, rep.ldot.twice, offset});
  if (it != values_.end()) return it->second;
  if (has_uniform_ && offset == 0) return uniform_diag_;
  return default_for(offset);
}

void CoefficientSet::set(const RepLabel& rep, int offset, const Surd& value) {
  if (offset < -1 || offset > 1) throw std::domain_error("coefficient offset must be -1, 0 or 1");
  values_[{rep.l.twice, rep.ldot.twice, offset}] = value;
}

CoefficientSet CoefficientSet::uniform(const Surd& diagonal) {
  CoefficientSet c;
  c.has_uniform_ = true;
  c.uniform_diag_ = diagonal;
  return c;
}

namespace {

// sqrt((l+m)(l-m+1)) with twice-value arguments.
Surd ladder_root(std::int64_t two_l, std::int64_t two_m) {
  std::int64_t a = (two_l + two_m) / 2;
  std::int64_t b = (two_l - two_m) / 2 + 1;
  return Surd(Rational(1), a * b);
}

// Single-index tables: Lambda^{l,0}_j (and the starred (0,ldot) family,
// whose diagonal blocks carry identical values).
OperatorMatrix edge_lambda(std::int64_t two_l, int j, const Surd& c) {
  int dim = static_cast<int>(two_l) + 1;
  OperatorMatrix out(dim);
  Surd half_c = c * Surd(Rational(1, 2));
  for (int col = 0; col < dim; ++col) {
    std::int64_t twm = two_l - 2 * col;
    if (j == 3) {
      out.set(col, col, GaussSurd(c * Surd(Rational(twm, 2))));
      continue;
    }
    if (twm - 2 >= -two_l) {  // row m-1: sqrt((l+m)(l-m+1))
      Surd root = ladder_root(two_l, twm);
      if (j == 1) out.add_to(col + 1, col, GaussSurd(half_c * root));
      else out.add_to(col + 1, col, GaussSurd::i_times(half_c * root));
    }
    if (twm + 2 <= two_l) {  // row m+1: sqrt((l+m+1)(l-m))
      Surd root = ladder_root(two_l, -twm);
      if (j == 1) out.add_to(col - 1, col, GaussSurd(half_c * root));
      else out.add_to(col - 1, col, GaussSurd::i_times(-(half_c * root)));
    }
  }
  return out;
}

// Two-index tables for interior representations. The starred variant flips
// the sign of every element of Lambda_1 and Lambda_2 and keeps Lambda_3.
OperatorMatrix interior_lambda(const RepLabel& rep, int j, const Surd& c, bool dual) {
  int dim = static_cast<int>(rep.degree());
  OperatorMatrix out(dim);
  Surd half_c = c * Surd(Rational(1, 2));
  Rational sgn = dual ? Rational(-1) : Rational(1);
  HelicityBasis b = basis(rep);
  for (int col = 0; col < dim; ++col) {
    auto [m, md] = b.order[static_cast<std::size_t>(col)];
    if (j == 3) {
      out.set(col, col, GaussSurd(c * Surd(m * md)));
      continue;
    }
    Surd mdot_val(md.to_rational());
    Surd m_val(m.to_rational());
    // m -> m-1 row, mdot fixed: +/- c/2 * mdot * sqrt((l+m)(l-m+1))
    if (m.twice - 2 >= -rep.l.twice) {
      Surd mag = half_c * Surd(sgn) * mdot_val * ladder_root(rep.l.twice, m.twice);
      int row = basis_index(rep, m - HalfInt::whole(1), md);
      if (j == 1) out.add_to(row, col, GaussSurd(mag));
      else out.add_to(row, col, GaussSurd::i_times(mag));
    }
    // m -> m+1 row: +/- c/2 * mdot * sqrt((l+m+1)(l-m))
    if (m.twice + 2 <= rep.l.twice) {
      Surd mag = half_c * Surd(sgn) * mdot_val * ladder_root(rep.l.twice, -m.twice);
      int row = basis_index(rep, m + HalfInt::whole(1), md);
      if (j == 1) out.add_to(row, col, GaussSurd(mag));
      else out.add_to(row, col, GaussSurd::i_times(-mag));
    }
    // mdot -> mdot-1 row, m fixed: -/+ c/2 * m * sqrt((ldot+mdot)(ldot-mdot+1))
    if (md.twice - 2 >= -rep.ldot.twice) {
      Surd mag = half_c * Surd(sgn) * m_val * ladder_root(rep.ldot.twice, md.twice);
      int row = basis_index(rep, m, md - HalfInt::whole(1));
      if (j == 1) out.add_to(row, col, GaussSurd(-mag));
      else out.add_to(row, col, GaussSurd::i_times(-mag));
    }
    // mdot -> mdot+1 row: -/+ c/2 * m * sqrt((ldot+mdot+1)(ldot-mdot))
    if (md.twice + 2 <= rep.ldot.twice) {
      Surd mag = half_c * Surd(sgn) * m_val * ladder_root(rep.ldot.twice, -md.twice);
      int row = basis_index(rep, m, md + HalfInt::whole(1));
      if (j == 1) out.add_to(row, col, GaussSurd(-mag));
      else out.add_to(row, col, GaussSurd::i_times(mag));
    }
  }
  return out;
}

}  // namespace

LambdaMatrix build_lambda(const RepLabel& rep, int j, const CoefficientSet& coeffs, bool dual) {
  if (j < 1 || j > 3) throw std::domain_error("axis index must be 1, 2 or 3");
  for (int off : {-1, 1})
    if (!coeffs.get(rep, off).is_zero())
      throw std::domain_error(
          "off-diagonal interlocking coefficient c_{l" + std::string(off < 0 ? "-" : "+") +
          "1,l} is non-zero for " + rep.to_string() +
          ": those elements couple chain-external blocks and are not part of a single "
          "square matrix");
  Surd c = coeffs.get(rep, 0);
  LambdaMatrix lam;
  lam.rep = rep;
  lam.j = j;
  lam.dual = dual;
  if (rep.is_edge()) {
    std::int64_t two_l = rep.l.twice == 0 ? rep.ldot.twice : rep.l.twice;
    lam.entries = edge_lambda(two_l, j, c);
  } else {
    lam.entries = interior_lambda(rep, j, c, dual);
  }
  return lam;
}

std::array<LambdaMatrix, 3> build_lambda_triple(const RepLabel& rep, const CoefficientSet& coeffs,
                                                bool dual) {
  return {build_lambda(rep, 1, coeffs, dual), build_lambda(rep, 2, coeffs, dual),
          build_lambda(rep, 3, coeffs, dual)};
}

std::array<OperatorMatrix, 3> mo_alpha() {
  GaussSurd pi = GaussSurd::i_times(Surd(Rational(1)));
  GaussSurd ni = GaussSurd::i_times(Surd(Rational(-1)));
  OperatorMatrix a1(3), a2(3), a3(3);
  a1.set(1, 2, pi);
  a1.set(2, 1, ni);
  a2.set(0, 2, ni);
  a2.set(2, 0, pi);
  a3.set(0, 1, pi);
  a3.set(1, 0, ni);
  return {a1, a2, a3};
}

RweSystem assemble_system(const SpinChain& chain, const Rational& mu0,
                          const CoefficientSet& coeffs) {
  if (chain.links.empty()) throw std::domain_error("empty spin chain");
  if (mu0 < Rational(0)) throw std::domain_error("mu0 must be non-negative");
  bool massless = mu0.is_zero();
  RweSystem sys;
  sys.chain = chain;
  sys.mu0 = mu0;
  sys.links.reserve(chain.links.size());
  for (const RepLabel& rep : chain.links) {
    // A massless chain has no spin-0 state: the l = ldot link drops out,
    // which reduces the spin-1 triplet to the two-equation photon system.
    if (massless && rep.l == rep.ldot) continue;
    RweLink link;
    link.rep = rep;
    link.forward = build_lambda_triple(rep, coeffs, false);
    link.dual = build_lambda_triple(rep, coeffs, true);
    link.link_mass = massless ? Rational(0) : mass(rep, mu0);
    link.dual_role = rep.l < rep.ldot;
    sys.links.push_back(std::move(link));
  }
  if (sys.links.empty()) throw std::domain_error("massless chain has no links left");
  return sys;
}

PauliCheckReport pauli_check(const Surd& c) {
  CoefficientSet coeffs = CoefficientSet::uniform(c);
  RepLabel rep = RepLabel::from_twice(1, 0);

  OperatorMatrix s1(2), s2(2), s3(2);
  GaussSurd one{Surd(Rational(1))};
  s1.set(0, 1, one);
  s1.set(1, 0, one);
  s2.set(0, 1, GaussSurd::i_times(Surd(Rational(-1))));
  s2.set(1, 0, GaussSurd::i_times(Surd(Rational(1))));
  s3.set(0, 0, one);
  s3.set(1, 1, -one);
  std::array<OperatorMatrix, 3> sigma{s1, s2, s3};

  PauliCheckReport rep_out;
  rep_out.ok = true;
  for (int j = 1; j <= 3; ++j) {
    LambdaMatrix lam = build_lambda(rep, j, coeffs);
    bool match = (lam.entries == sigma[static_cast<std::size_t>(j - 1)]);
    rep_out.axis_match[static_cast<std::size_t>(j - 1)] = match;
    rep_out.ok = rep_out.ok && match;
  }
  if (rep_out.ok) {
    rep_out.note = "Lambda^{1/2,0}_j = sigma_j at c = " + c.to_string();
  } else {
    rep_out.note = "mismatch at c = " + c.to_string() + "; matrices scale as c/2 * sigma_j";
  }
  return rep_out;
}

}  // namespace spinspec

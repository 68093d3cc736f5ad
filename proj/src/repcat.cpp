#include "spinspec/repcat.hpp"

#include <cmath>

namespace spinspec {

SubstrateDescriptor substrate(const RepLabel& rep) {
  SubstrateDescriptor d;
  d.k = rep.l.twice;
  d.r = rep.ldot.twice;
  if (d.k + d.r > 62) throw overflow_error("spinspace dimension exceeds int64");
  d.spinspace_dim = std::int64_t(1) << (d.k + d.r);
  d.sym_dim = (d.k + 1) * (d.r + 1);
  return d;
}

std::string to_string(CliffordRing r) {
  switch (r) {
    case CliffordRing::R: return "R";
    case CliffordRing::RR: return "R+R";
    case CliffordRing::C: return "C";
    case CliffordRing::H: return "H";
    case CliffordRing::HH: return "H+H";
  }
  return "?";
}

std::string to_string(ChargeClass c) {
  switch (c) {
    case ChargeClass::charged: return "charged";
    case ChargeClass::neutral: return "neutral";
    case ChargeClass::truly_neutral: return "truly_neutral";
  }
  return "?";
}

Rational mass(const RepLabel& rep, const Rational& mu0) {
  if (!(mu0 > Rational(0))) throw std::domain_error("mu0 must be positive");
  return mu0 * Rational(rep.l.twice + 1, 2) * Rational(rep.ldot.twice + 1, 2);
}

std::vector<HalfInt> su2_restriction(const RepLabel& rep) {
  std::vector<HalfInt> spins;
  std::int64_t hi = rep.l.twice + rep.ldot.twice;
  std::int64_t lo = std::abs(rep.l.twice - rep.ldot.twice);
  for (std::int64_t tw = hi; tw >= lo; tw -= 2) spins.push_back(HalfInt::from_twice(tw));
  return spins;
}

SpinChain chain(const RepLabel& rep) {
  SpinChain c;
  std::int64_t step = (rep.l < rep.ldot) ? 1 : -1;
  RepLabel cur = rep;
  c.links.push_back(cur);
  while (cur.l != rep.ldot) {
    cur = RepLabel(HalfInt::from_twice(cur.l.twice + step),
                   HalfInt::from_twice(cur.ldot.twice - step));
    c.links.push_back(cur);
  }
  return c;
}

std::vector<RepLabel> spin_line(HalfInt s, int count) {
  if (count < 1) throw std::domain_error("spin_line needs count >= 1");
  std::vector<RepLabel> line;
  line.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n)
    line.push_back(RepLabel(HalfInt::from_twice(s.twice + n), HalfInt::from_twice(n)));
  return line;
}

CellIndex cell_index(const RepLabel& rep) {
  // w in (4n-6, 4n-2], i.e. n is the least integer with 2w <= 8n-4.
  std::int64_t tw = rep.weight().twice;
  std::int64_t n = (tw + 4 + 7) / 8;  // ceil((2w+4)/8)
  if (n < 1) n = 1;
  CellIndex out;
  out.cell = static_cast<int>(n);
  out.boundary_distance = HalfInt::from_twice(8 * n - 4 - tw);
  return out;
}

CliffordClass classify_clifford(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw std::domain_error("Clifford signature needs p, q >= 0");
  CliffordClass out;
  out.p = p;
  out.q = q;
  out.mod8 = static_cast<int>(((p - q) % 8 + 8) % 8);
  switch (out.mod8) {
    case 0:
    case 2: out.ring = CliffordRing::R; break;
    case 1: out.ring = CliffordRing::RR; break;
    case 3:
    case 7: out.ring = CliffordRing::C; break;
    case 4:
    case 6: out.ring = CliffordRing::H; break;
    case 5: out.ring = CliffordRing::HH; break;
  }
  switch (out.ring) {
    case CliffordRing::C: out.charge_class = ChargeClass::charged; break;
    case CliffordRing::H:
    case CliffordRing::HH: out.charge_class = ChargeClass::neutral; break;
    default: out.charge_class = ChargeClass::truly_neutral; break;
  }
  return out;
}

double fractal_dimension() { return std::log(63.0) / std::log(8.0); }

}  // namespace spinspec

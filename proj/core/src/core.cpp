#include "qconcept/core.hpp"

#include <algorithm>
#include <cmath>

namespace qc {

std::string_view to_string(Connective c) {
  return c == Connective::Conjunction ? "conj" : "disj";
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::Classical: return "classical";
    case Label::DeltaNonclassical: return "delta_nonclassical";
    case Label::KNonclassical: return "k_nonclassical";
  }
  return "unknown";
}

std::string_view to_string(Inequality i) {
  switch (i) {
    case Inequality::RuleA: return "rule_a";
    case Inequality::RuleB: return "rule_b";
    case Inequality::KFactor: return "k_factor";
  }
  return "unknown";
}

bool is_valid(const MembershipTriple& t, double eps) {
  auto in_unit = [eps](double v) { return std::isfinite(v) && v >= -eps && v <= 1.0 + eps; };
  return in_unit(t.mu_a) && in_unit(t.mu_b) && in_unit(t.mu_combo);
}

std::pair<double, double> classicality_factors(const MembershipTriple& t) {
  if (t.connective == Connective::Conjunction) {
    return {t.mu_combo - std::min(t.mu_a, t.mu_b), 1.0 - t.mu_a - t.mu_b + t.mu_combo};
  }
  return {std::max(t.mu_a, t.mu_b) - t.mu_combo, t.mu_a + t.mu_b - t.mu_combo};
}

Classification classify(const MembershipTriple& t, double eps) {
  auto [delta, k] = classicality_factors(t);
  Classification c;
  c.delta = delta;
  c.k = k;
  if (delta > eps) {
    c.label = Label::DeltaNonclassical;
  } else if (k < -eps) {
    c.label = Label::KNonclassical;
  } else {
    c.label = Label::Classical;
  }
  return c;
}

Expected<KolmogorovWitness, NotClassical> kolmogorov_witness(const MembershipTriple& t,
                                                             double eps) {
  const double a = t.mu_a, b = t.mu_b, m = t.mu_combo;
  KolmogorovWitness w;
  // rule_a and rule_b atoms, then the k atom; the remaining atom is never negative
  // for valid input.
  double rule_a = 0.0, rule_b = 0.0, kf = 0.0;
  if (t.connective == Connective::Conjunction) {
    rule_a = a - m;
    rule_b = b - m;
    kf = 1.0 - a - b + m;
    w.p = {m, rule_a, rule_b, kf};
  } else {
    rule_a = m - a;
    rule_b = m - b;
    kf = a + b - m;
    // p2 carries mu_combo - mu_b and p3 carries mu_combo - mu_a.
    w.p = {kf, rule_b, rule_a, 1.0 - m};
  }
  if (rule_a < -eps) return NotClassical{Inequality::RuleA};
  if (rule_b < -eps) return NotClassical{Inequality::RuleB};
  if (kf < -eps) return NotClassical{Inequality::KFactor};
  for (double& p : w.p) {
    if (p < 0.0) p = 0.0;
  }
  return w;
}

bool verify_witness(const KolmogorovWitness& w, const MembershipTriple& t, double tol) {
  for (unsigned mask = 0; mask < 16; ++mask) {
    double s = 0.0;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) s += w.p[i];
    }
    if (!(s >= -tol && s <= 1.0 + tol)) return false;
  }
  const double total = w.p[0] + w.p[1] + w.p[2] + w.p[3];
  if (std::abs(total - 1.0) > tol) return false;

  const double pa = w.p[0] + w.p[1];
  const double pb = w.p[0] + w.p[2];
  const double pc = t.connective == Connective::Conjunction ? w.p[0]
                                                            : w.p[0] + w.p[1] + w.p[2];
  return std::abs(pa - t.mu_a) <= tol && std::abs(pb - t.mu_b) <= tol &&
         std::abs(pc - t.mu_combo) <= tol;
}

MembershipTriple complement_dual(const MembershipTriple& t) {
  return {1.0 - t.mu_a, 1.0 - t.mu_b, 1.0 - t.mu_combo,
          t.connective == Connective::Conjunction ? Connective::Disjunction
                                                  : Connective::Conjunction};
}

}  // namespace qc

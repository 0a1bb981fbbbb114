#include "qconcept/fock.hpp"

#include <algorithm>
#include <cmath>

#include "qconcept/hilbert_c3.hpp"

namespace qc {

std::string_view to_string(FockError e) {
  switch (e) {
    case FockError::OutOfRange: return "out_of_range";
    case FockError::Degenerate: return "degenerate";
    case FockError::Infeasible: return "infeasible";
  }
  return "unknown";
}

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::C3Interference: return "c3";
    case ModelKind::FockConvex: return "fock";
    case ModelKind::Unmodelable: return "unmodelable";
  }
  return "unknown";
}

double two_particle_value(double mu_a, double mu_b, Connective c) {
  return c == Connective::Conjunction ? mu_a * mu_b : mu_a + mu_b - mu_a * mu_b;
}

Expected<double, FockError> fock_membership(double mu_a, double mu_b, const FockWeights& w,
                                            Connective c, double eps) {
  const double v = w.m2 * two_particle_value(mu_a, mu_b, c) +
                   w.n2 * (0.5 * (mu_a + mu_b) + w.interference);
  if (!(v >= -eps && v <= 1.0 + eps)) return FockError::OutOfRange;
  return std::clamp(v, 0.0, 1.0);
}

Expected<FockWeights, FockError> solve_convex_weights(const MembershipTriple& t, double eps) {
  const double s = two_particle_value(t.mu_a, t.mu_b, t.connective);
  const double avg = 0.5 * (t.mu_a + t.mu_b);
  FockWeights w;
  if (avg == s) {
    if (std::abs(t.mu_combo - avg) > eps) return FockError::Degenerate;
    w.m2 = 0.0;
  } else {
    const double m2 = (avg - t.mu_combo) / (avg - s);
    if (m2 < -eps || m2 > 1.0 + eps) return FockError::Infeasible;
    w.m2 = std::clamp(m2, 0.0, 1.0);
  }
  w.n2 = 1.0 - w.m2;
  w.interference = 0.0;
  return w;
}

ModelKind select_model(const MembershipTriple& t, double eps) {
  if (c3_exists(t, eps).ok) return ModelKind::C3Interference;
  if (solve_convex_weights(t, eps)) return ModelKind::FockConvex;
  return ModelKind::Unmodelable;
}

}  // namespace qc

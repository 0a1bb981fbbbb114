#include "qconcept/hilbert_c3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qc {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct Branch {
  double a, b;
  bool swapped;
};

Branch select_branch(const MembershipTriple& t) {
  if (t.mu_a + t.mu_b >= 1.0) return {t.mu_a, t.mu_b, false};
  return {1.0 - t.mu_a, 1.0 - t.mu_b, true};
}

bool near(double v, double target, double eps) { return std::abs(v - target) <= eps; }

}  // namespace

std::string_view to_string(C3Status s) {
  switch (s) {
    case C3Status::Ok: return "ok";
    case C3Status::DegenerateWeight: return "degenerate_weight";
    case C3Status::CosOutOfRange: return "cos_out_of_range";
  }
  return "unknown";
}

C3Existence c3_exists(const MembershipTriple& t, double eps) {
  if (near(t.mu_a, 0.0, eps) || near(t.mu_a, 1.0, eps) || near(t.mu_b, 0.0, eps) ||
      near(t.mu_b, 1.0, eps)) {
    return {false, C3Status::DegenerateWeight};
  }
  const Branch br = select_branch(t);
  const double bound = 2.0 * std::sqrt((1.0 - br.a) * (1.0 - br.b));
  if (std::abs(2.0 * t.mu_combo - t.mu_a - t.mu_b) > bound + eps) {
    return {false, C3Status::CosOutOfRange};
  }
  return {true, C3Status::Ok};
}

Expected<C3Model, C3Status> build_c3(const MembershipTriple& t, double eps) {
  const C3Existence ex = c3_exists(t, eps);
  if (!ex.ok) return ex.reason;

  const Branch br = select_branch(t);
  const double a = br.a, b = br.b;
  C3Model m;
  m.a = a;
  m.b = b;
  m.swapped = br.swapped;
  m.connective = t.connective;
  m.vec_a = {std::sqrt(a), 0.0, std::sqrt(1.0 - a)};
  // a + b - 1 is zero on the branch boundary and may round slightly negative.
  m.vec_b = {std::sqrt((1.0 - a) * (1.0 - b) / a), std::sqrt(std::max(0.0, a + b - 1.0) / a),
             -std::sqrt(1.0 - b)};

  double arg = (2.0 * t.mu_combo - t.mu_a - t.mu_b) / (2.0 * std::sqrt((1.0 - a) * (1.0 - b)));
  if (std::abs(arg) > 1.0) {
    if (std::abs(arg) > 1.0 + eps) return C3Status::CosOutOfRange;
    arg = std::clamp(arg, -1.0, 1.0);
  }
  m.beta_deg = std::acos(arg) * kRadToDeg;
  return m;
}

double c3_interference(const C3Model& m) {
  return std::sqrt((1.0 - m.a) * (1.0 - m.b)) * std::cos(m.beta_deg / kRadToDeg);
}

MembershipTriple c3_predict(const C3Model& m) {
  MembershipTriple t;
  t.connective = m.connective;
  t.mu_a = m.swapped ? 1.0 - m.a : m.a;
  t.mu_b = m.swapped ? 1.0 - m.b : m.b;
  t.mu_combo = 0.5 * (t.mu_a + t.mu_b) + c3_interference(m);
  return t;
}

}  // namespace qc

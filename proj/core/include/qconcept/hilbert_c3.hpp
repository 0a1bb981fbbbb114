#pragma once

#include <array>
#include <string_view>

#include "qconcept/core.hpp"

namespace qc {

// Interference model in C^3.  The concept projector M is the span of the first
// two basis vectors; |B> carries a global phase exp(i*beta) that is kept apart.
struct C3Model {
  double a = 0.0;
  double b = 0.0;
  bool swapped = false;  // a = 1 - mu_a, b = 1 - mu_b branch
  std::array<double, 3> vec_a{};
  std::array<double, 3> vec_b{};  // before the phase
  double beta_deg = 0.0;
  Connective connective = Connective::Disjunction;
};

enum class C3Status { Ok, DegenerateWeight, CosOutOfRange };

struct C3Existence {
  bool ok = false;
  C3Status reason = C3Status::Ok;
};

std::string_view to_string(C3Status s);

C3Existence c3_exists(const MembershipTriple& t, double eps = kEps);

// Fails with the reason reported by c3_exists (NotRepresentable).
Expected<C3Model, C3Status> build_c3(const MembershipTriple& t, double eps = kEps);

MembershipTriple c3_predict(const C3Model& m);

// Real part of <A|M|B> for the built model: sqrt((1-a)(1-b)) cos(beta).
double c3_interference(const C3Model& m);

}  // namespace qc

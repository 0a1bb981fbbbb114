#pragma once

#include <string_view>

#include "qconcept/core.hpp"

namespace qc {

// Two-sector Fock superposition: the two-particle sector (weight m2) evaluates
// the combination logically, the one-particle sector (weight n2) evaluates the
// emergent concept by interference around the average.
struct FockWeights {
  double m2 = 0.0;
  double n2 = 1.0;
  double interference = 0.0;
};

enum class FockError { OutOfRange, Degenerate, Infeasible };

enum class ModelKind { C3Interference, FockConvex, Unmodelable };

std::string_view to_string(FockError e);
std::string_view to_string(ModelKind k);

// Product (conjunction) or union (disjunction) of independent memberships.
double two_particle_value(double mu_a, double mu_b, Connective c);

Expected<double, FockError> fock_membership(double mu_a, double mu_b, const FockWeights& w,
                                            Connective c, double eps = kEps);

Expected<FockWeights, FockError> solve_convex_weights(const MembershipTriple& t,
                                                      double eps = kEps);

ModelKind select_model(const MembershipTriple& t, double eps = kEps);

}  // namespace qc

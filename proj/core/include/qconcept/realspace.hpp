#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "qconcept/core.hpp"

namespace qc {

// Components ordered (x_AB, x_AB', x_A'B, x_A'B').
using R4Vector = std::array<double, 4>;
// Row-major 8x8 matrix.
using Matrix8 = std::array<double, 64>;

struct PairAngles {
  double theta_deg = 90.0;  // open interval (0, 180)
  double phi_deg = 0.0;     // closed interval [0, 90]
};

bool is_valid(const PairAngles& a);

enum class RealspaceError { NotClassical, NegativeRadicand, Infeasible, InvalidSubspace };

std::string_view to_string(RealspaceError e);

// Sign choices for the square roots of a = mu_a - mu_and and b = mu_b - mu_and.
struct SignPair {
  int a = +1;
  int b = +1;
};

struct ThetaInterval {
  SignPair signs;
  double lo_deg = 0.0;
  double hi_deg = 0.0;
};

// ---- classical R^4 representation -------------------------------------------------

Expected<R4Vector, RealspaceError> classical_vector(const MembershipTriple& t,
                                                    double eps = kEps);

MembershipTriple reconstruct_from_vector(const R4Vector& v, Connective c);

// ---- k-type conjunction model with theta-tilted subspaces ------------------------

double quantum_logic_factor_unchecked(const MembershipTriple& t, double theta_deg,
                                      SignPair s);

Expected<double, RealspaceError> quantum_logic_factor(const MembershipTriple& t,
                                                      double theta_deg, SignPair s,
                                                      double eps = kEps);

Expected<std::vector<ThetaInterval>, RealspaceError> theta_feasible_intervals(
    const MembershipTriple& t, double eps = kEps);

Expected<R4Vector, RealspaceError> ktype_vector(const MembershipTriple& t, double theta_deg,
                                                SignPair s, double eps = kEps);

// Orthonormal spanning sets of the tilted subspaces in R^4:
// A = span{e_AB, e_A(theta)}, B = span{e_AB, e_B(theta)}.
struct TiltedSubspaces {
  std::vector<std::vector<double>> a;
  std::vector<std::vector<double>> b;
};
TiltedSubspaces ktype_subspaces(double theta_deg);

// ---- meet / join oracle ---------------------------------------------------------

struct MeetJoinWeights {
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_meet = 0.0;  // projection on the intersection
  double mu_join = 0.0;  // projection on the closed linear sum
  double delta_c = 0.0;  // mu_meet - min(mu_a, mu_b)
  double delta_d = 0.0;  // max(mu_a, mu_b) - mu_join
  bool conj_ok = false;  // delta_c <= eps
  bool disj_ok = false;  // delta_d <= eps
};

Expected<MeetJoinWeights, RealspaceError> meet_join_check(
    std::size_t n, const std::vector<std::vector<double>>& subspace_a,
    const std::vector<std::vector<double>>& subspace_b, const std::vector<double>& x,
    double eps = kEps);

// ---- emergent-concept rotation on the quantum block of R^8 ------------------------

// Product of the rotation by phi in the (e5, bisector of e6/e7) plane with the
// rotation by 90 degrees in the (e6, e8) plane.  Columns 5..8 are f5..f8.
Matrix8 emergent_rotation(double phi_deg);

// (c5, c6, c7, c8): coordinates of x on f5..f8.
std::array<double, 4> emergent_coordinates(const std::array<double, 8>& x, double phi_deg);

// Complement triple read as the other connective; an involution.
MembershipTriple conjunction_dual(const MembershipTriple& t);

}  // namespace qc

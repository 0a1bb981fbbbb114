#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qconcept/core.hpp"
#include "qconcept/realspace.hpp"

namespace qc {

using R8Vector = std::array<double, 8>;

struct R8Derived {
  double x_a = 0.0;
  double x_a_perp = 0.0;
  double x_b = 0.0;
  double x_b_perp = 0.0;
  // For a conjunction, c5 and c6 are the coordinates on the plane carrying the
  // quantum part of the conjunction; c7 and c8 span the rest of the block.
  std::array<double, 4> c{};
};

struct RelativeWeights {
  double mu_c_total = 0.0;
  double mu_q_total = 0.0;
  std::optional<std::array<double, 3>> mu_c_r;  // (A, B, combo); empty when the sector is empty
  std::optional<std::array<double, 3>> mu_q_r;
};

struct R8Solution {
  R8Vector x{};
  PairAngles angles;
  Connective connective = Connective::Disjunction;
  R8Derived derived;
  double classical_target = 0.0;  // mu_c(combo) / mu_c(total)
  double residual = 0.0;
  RelativeWeights relative_weights;
};

struct R8Options {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
  std::size_t scan_points = 1000;
  bool allow_x8 = true;
};

enum class R8Error { InvalidAngles, InvalidTriple, NoSolution };

struct R8Failure {
  R8Error kind = R8Error::NoSolution;
  double best_residual = 0.0;
};

std::string_view to_string(R8Error e);

// mu_c(combo) / mu_c(total) required of a solution for t.
double classical_combo_target(const MembershipTriple& t, double eps = kEps);

// Signed residuals: mu_A, mu_B, mu_combo, norm, modularity and, when a target is
// given, mu_c(combo)/mu_c(total) - target.
std::vector<double> r8_residuals(const R8Vector& x, const PairAngles& angles,
                                 const MembershipTriple& t,
                                 std::optional<double> modularity_target = std::nullopt);

R8Derived r8_derived(const R8Vector& x, const PairAngles& angles, Connective c);

RelativeWeights relative_weights(const R8Solution& s, Connective c, double eps = kEps);

Expected<R8Solution, R8Failure> solve_r8(const MembershipTriple& t, const PairAngles& angles,
                                         const R8Options& options = {});

// ---- pair angle fit -------------------------------------------------------------

struct FitOptions {
  R8Options solver{1e-12, 100000, 400, true};
  double coarse_step_deg = 1.0;
  double fine_step_deg = 0.05;
  double precision_deg = 1e-4;
  unsigned jobs = 1;
};

struct PairFit {
  PairAngles angles;
  double summed_residual = 0.0;
};

enum class FitError { EmptyInput, MixedConnectives, NoFeasibleAngles };

std::string_view to_string(FitError e);

bool angles_feasible(const std::vector<MembershipTriple>& items, const PairAngles& angles,
                     const R8Options& options, double* summed_residual = nullptr);

Expected<PairFit, FitError> fit_pair_angles(const std::vector<MembershipTriple>& items,
                                            Connective c, const FitOptions& options = {});

}  // namespace qc

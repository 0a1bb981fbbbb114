#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "qconcept/expected.hpp"

namespace qc {

// Artifact-wide comparison slack for classification, feasibility and clamping.
inline constexpr double kEps = 1e-9;
// Exactness required of an explicit probability witness.
inline constexpr double kWitnessTol = 1e-12;

enum class Connective { Conjunction, Disjunction };

struct MembershipTriple {
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_combo = 0.0;
  Connective connective = Connective::Conjunction;
};

enum class Label { Classical, DeltaNonclassical, KNonclassical };

struct Classification {
  Label label = Label::Classical;
  double delta = 0.0;
  double k = 0.0;
};

// Four atoms; E_A = {1,2}, E_B = {1,3} (zero-based {0,1} and {0,2}).
struct KolmogorovWitness {
  std::array<double, 4> p{};
};

// Which of the three single-item classicality inequalities failed.
//   RuleA / RuleB: the min rule (conjunction) or max rule (disjunction) for A / B.
//   KFactor:       the Kolmogorovian factor k is negative.
enum class Inequality { RuleA, RuleB, KFactor };

struct NotClassical {
  Inequality violated;
};

std::string_view to_string(Connective c);
std::string_view to_string(Label l);
std::string_view to_string(Inequality i);

bool is_valid(const MembershipTriple& t, double eps = kEps);

// (delta, k): conjunction (mu_combo - min, 1 - mu_a - mu_b + mu_combo),
// disjunction (max - mu_combo, mu_a + mu_b - mu_combo).
std::pair<double, double> classicality_factors(const MembershipTriple& t);

Classification classify(const MembershipTriple& t, double eps = kEps);

Expected<KolmogorovWitness, NotClassical> kolmogorov_witness(
    const MembershipTriple& t, double eps = kEps);

bool verify_witness(const KolmogorovWitness& w, const MembershipTriple& t,
                    double tol = kWitnessTol);

// (1 - mu_a, 1 - mu_b, 1 - mu_combo) with the connective flipped.
MembershipTriple complement_dual(const MembershipTriple& t);

}  // namespace qc

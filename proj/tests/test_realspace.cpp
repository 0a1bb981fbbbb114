#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "qconcept/realspace.hpp"

namespace {

using namespace qc;
constexpr auto Conj = Connective::Conjunction;
constexpr auto Disj = Connective::Disjunction;

double projected(const std::vector<std::vector<double>>& basis, const R4Vector& v) {
  double w = 0;
  for (const auto& e : basis) {
    double d = 0;
    for (int i = 0; i < 4; ++i) d += e[i] * v[i];
    w += d * d;
  }
  return w;
}

MembershipTriple random_classical_conj(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  const double a = u(rng), b = u(rng);
  const double lo = std::max(0.0, a + b - 1.0), hi = std::min(a, b);
  return {a, b, lo + (hi - lo) * u(rng), Conj};
}

TEST(PairAngles, Validity) {
  EXPECT_TRUE(is_valid(PairAngles{90, 0}));
  EXPECT_TRUE(is_valid(PairAngles{0.5, 90}));
  EXPECT_FALSE(is_valid(PairAngles{0, 10}));
  EXPECT_FALSE(is_valid(PairAngles{180, 10}));
  EXPECT_FALSE(is_valid(PairAngles{90, -1}));
  EXPECT_FALSE(is_valid(PairAngles{90, 90.5}));
}

TEST(ClassicalVector, Sailboat) {
  const R4Vector want{0.6489, 0.3782, 0.6156, 0.2386};
  // 22/39 and 8/19 are the unrounded weights behind 0.5641 and 0.4211
  auto exact = classical_vector({22.0 / 39.0, 0.8, 8.0 / 19.0, Conj});
  ASSERT_TRUE(exact);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR((*exact)[i], want[i], 1e-4);
  auto rounded = classical_vector({0.5641, 0.8, 0.4211, Conj});
  ASSERT_TRUE(rounded);
  EXPECT_NEAR((*rounded)[3], std::sqrt(0.057), 1e-12);
}

TEST(ClassicalVector, CornerItems) {
  auto backpack = classical_vector({0, 0, 0, Conj});
  ASSERT_TRUE(backpack);
  EXPECT_EQ((*backpack)[3], 1.0);
  auto car = classical_vector({1, 1, 1, Conj});
  ASSERT_TRUE(car);
  EXPECT_EQ((*car)[0], 1.0);
}

TEST(ClassicalVector, RejectsNonClassical) {
  auto v = classical_vector({0.7, 0.3, 0.25, Disj});
  ASSERT_FALSE(v);
  EXPECT_EQ(v.error(), RealspaceError::NotClassical);
}

TEST(ClassicalVector, RoundTripGridBothConnectives) {
  for (Connective c : {Conj, Disj}) {
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        for (int l = 0; l <= 20; ++l) {
          const MembershipTriple t{i / 20.0, j / 20.0, l / 20.0, c};
          auto v = classical_vector(t);
          if (!v) continue;
          double norm = 0;
          for (double x : *v) norm += x * x;
          ASSERT_NEAR(norm, 1.0, 1e-12);
          const MembershipTriple r = reconstruct_from_vector(*v, c);
          ASSERT_NEAR(r.mu_a, t.mu_a, 1e-9);
          ASSERT_NEAR(r.mu_b, t.mu_b, 1e-9);
          ASSERT_NEAR(r.mu_combo, t.mu_combo, 1e-9);
        }
      }
    }
  }
}

TEST(KType, HorseCartIntervals) {
  auto iv = theta_feasible_intervals({0.3846, 0.95, 0.2895, Conj});
  ASSERT_TRUE(iv);
  ASSERT_EQ(iv->size(), 2u);
  // the printed bounds use square roots rounded to 0.3084 and 0.8127
  EXPECT_NEAR((*iv)[0].lo_deg, 53.1553, 2e-3);
  EXPECT_NEAR((*iv)[0].hi_deg, 83.9225, 2e-3);
  EXPECT_NEAR((*iv)[1].lo_deg, 96.0775, 2e-3);
  EXPECT_NEAR((*iv)[1].hi_deg, 126.8447, 2e-3);
  for (const ThetaInterval& r : *iv) {
    EXPECT_NEAR(quantum_logic_factor_unchecked({0.3846, 0.95, 0.2895, Conj}, r.lo_deg, r.signs),
                0.0, 1e-12);
    EXPECT_NEAR(quantum_logic_factor_unchecked({0.3846, 0.95, 0.2895, Conj}, r.hi_deg, r.signs),
                0.0, 1e-12);
  }
  EXPECT_EQ((*iv)[1].signs.b, -1);
}

TEST(KType, DishwasherDegenerateAngles) {
  const MembershipTriple t{1, 0.025, 0, Conj};
  auto iv = theta_feasible_intervals(t);
  ASSERT_TRUE(iv);
  ASSERT_EQ(iv->size(), 2u);
  EXPECT_NEAR((*iv)[0].lo_deg, 80.9026, 1e-4);
  EXPECT_NEAR((*iv)[1].hi_deg, 99.0974, 1e-4);
  auto q = quantum_logic_factor(t, 80.9026, {});
  ASSERT_TRUE(q);
  EXPECT_NEAR(*q, 0.0, 1e-5);
}

TEST(KType, SingleIntervalWhenARadicandVanishes) {
  auto iv = theta_feasible_intervals({0.5, 0.3, 0.3, Conj});
  ASSERT_TRUE(iv);
  EXPECT_EQ(iv->size(), 1u);
}

TEST(KType, ErrorsOnNegativeRadicandAndFullCombination) {
  auto a = theta_feasible_intervals({0.2, 0.8, 0.5, Conj});
  ASSERT_FALSE(a);
  EXPECT_EQ(a.error(), RealspaceError::NegativeRadicand);
  auto b = theta_feasible_intervals({1, 1, 1, Conj});
  ASSERT_FALSE(b);
  EXPECT_EQ(b.error(), RealspaceError::Infeasible);
}

TEST(KType, HorseCartAndSailboatVectors) {
  auto cart = ktype_vector({0.3846, 0.95, 0.2895, Conj}, 80.9026, {});
  ASSERT_TRUE(cart);
  const R4Vector want{0.5380, 0.2461, 0.7957, 0.1296};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR((*cart)[i], want[i], 1e-4);
  auto boat = ktype_vector({0.5641, 0.8, 0.4211, Conj}, 80.9026, {});
  ASSERT_TRUE(boat);
  const R4Vector want_boat{0.6489, 0.3324, 0.5911, 0.3451};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR((*boat)[i], want_boat[i], 1e-4);
}

TEST(KTypeProperty, RightAngleGivesK) {
  std::mt19937_64 rng(90);
  for (int i = 0; i < 1000; ++i) {
    const MembershipTriple t = random_classical_conj(rng);
    EXPECT_NEAR(quantum_logic_factor_unchecked(t, 90.0, {}), 1 - t.mu_a - t.mu_b + t.mu_combo,
                1e-12);
  }
}

TEST(KTypeProperty, VectorsProjectOntoTheTiltedSubspaces) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(5, 175);
  int built = 0;
  for (int i = 0; i < 3000; ++i) {
    const MembershipTriple t = random_classical_conj(rng);
    const double theta = angle(rng);
    const SignPair s{1, i % 2 ? 1 : -1};
    auto v = ktype_vector(t, theta, s);
    if (!v) continue;
    ++built;
    const TiltedSubspaces sub = ktype_subspaces(theta);
    double norm = 0;
    for (double x : *v) norm += x * x;
    EXPECT_NEAR(norm, 1.0, 1e-9);
    EXPECT_NEAR(projected(sub.a, *v), t.mu_a, 1e-9);
    EXPECT_NEAR(projected(sub.b, *v), t.mu_b, 1e-9);
    EXPECT_NEAR((*v)[0] * (*v)[0], t.mu_combo, 1e-12);
  }
  EXPECT_GT(built, 300);
}

TEST(KTypeProperty, IntervalsBoundTheFeasibleAngles) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const MembershipTriple t = random_classical_conj(rng);
    auto iv = theta_feasible_intervals(t);
    if (!iv) continue;
    for (const ThetaInterval& r : *iv) {
      if (r.hi_deg - r.lo_deg < 1e-3) continue;
      const double mid = 0.5 * (r.lo_deg + r.hi_deg);
      EXPECT_GE(quantum_logic_factor_unchecked(t, mid, r.signs), -1e-9);
      if (r.lo_deg > 1e-3) {
        EXPECT_LT(quantum_logic_factor_unchecked(t, r.lo_deg - 1e-3, r.signs), 0.0);
      }
    }
  }
}

TEST(MeetJoin, TiltedPlanesMeetOnTheCommonAxis) {
  const TiltedSubspaces s = ktype_subspaces(70);
  auto w = meet_join_check(4, s.a, s.b, {0.5, 0.5, 0.5, 0.5});
  ASSERT_TRUE(w);
  EXPECT_NEAR(w->mu_meet, 0.25, 1e-12);
  EXPECT_NEAR(w->mu_join, 0.75, 1e-12);
  EXPECT_TRUE(w->conj_ok);
  EXPECT_TRUE(w->disj_ok);
}

TEST(MeetJoin, RejectsNonOrthonormalBases) {
  auto w = meet_join_check(3, {{1, 1, 0}}, {{0, 0, 1}}, {1, 0, 0});
  ASSERT_FALSE(w);
  EXPECT_EQ(w.error(), RealspaceError::InvalidSubspace);
  auto d = meet_join_check(3, {{1, 0}}, {{0, 0, 1}}, {1, 0, 0});
  ASSERT_FALSE(d);
}

TEST(MeetJoinProperty, RandomSubspaces) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + i % 5;
    const int ka = 1 + i % (n - 1), kb = 1 + (i / 3) % (n - 1);
    Eigen::MatrixXd ma(n, ka), mb(n, kb);
    for (Eigen::Index k = 0; k < ma.size(); ++k) ma.data()[k] = g(rng);
    for (Eigen::Index k = 0; k < mb.size(); ++k) mb.data()[k] = g(rng);
    if (i % 2) mb.col(0) = ma.col(0);
    Eigen::HouseholderQR<Eigen::MatrixXd> qa(ma), qb(mb);
    const Eigen::MatrixXd ua = qa.householderQ() * Eigen::MatrixXd::Identity(n, ka);
    const Eigen::MatrixXd ub = qb.householderQ() * Eigen::MatrixXd::Identity(n, kb);
    std::vector<std::vector<double>> sa, sb;
    for (int k = 0; k < ka; ++k) sa.emplace_back(ua.col(k).data(), ua.col(k).data() + n);
    for (int k = 0; k < kb; ++k) sb.emplace_back(ub.col(k).data(), ub.col(k).data() + n);
    Eigen::VectorXd x(n);
    for (int k = 0; k < n; ++k) x(k) = g(rng);
    x.normalize();
    auto w = meet_join_check(n, sa, sb, std::vector<double>(x.data(), x.data() + n));
    ASSERT_TRUE(w);
    EXPECT_LE(w->delta_c, 1e-9);
    EXPECT_LE(w->delta_d, 1e-9);
    if (i % 2) EXPECT_GT(w->mu_meet, 0.0);
  }
}

TEST(Emergent, RotationIsOrthogonal) {
  for (double phi : {0.0, 12.0, 45.0, 90.0}) {
    const Matrix8 r = emergent_rotation(phi);
    Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> m(r.data());
    EXPECT_TRUE((m * m.transpose()).isIdentity(1e-12));
    EXPECT_NEAR(m.determinant(), 1.0, 1e-12);
    EXPECT_TRUE((m.topLeftCorner<4, 4>().isIdentity(1e-15)));
  }
}

TEST(Emergent, QuarterTurnAtZeroAndBisectorAtRightAngle) {
  const Matrix8 r0 = emergent_rotation(0);
  Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> m0(r0.data());
  EXPECT_NEAR(m0(4, 4), 1.0, 1e-15);
  EXPECT_NEAR(m0(7, 5), 1.0, 1e-15);
  const Matrix8 r90 = emergent_rotation(90);
  Eigen::Map<const Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> m90(r90.data());
  // f5 points along the bisector of e6 and e7
  EXPECT_NEAR(m90(5, 4), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(m90(6, 4), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(m90(4, 4), 0.0, 1e-12);
}

TEST(EmergentProperty, CoordinatesMatchTheRotationColumns) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1), ph(0, 90);
  for (int i = 0; i < 500; ++i) {
    std::array<double, 8> x{};
    for (double& v : x) v = u(rng);
    const double phi = ph(rng);
    const Matrix8 r = emergent_rotation(phi);
    const auto c = emergent_coordinates(x, phi);
    double block = 0, sum = 0;
    for (int j = 0; j < 4; ++j) {
      double d = 0;
      for (int k = 0; k < 8; ++k) d += r[k * 8 + 4 + j] * x[k];
      EXPECT_NEAR(c[j], d, 1e-12);
      block += x[4 + j] * x[4 + j];
      sum += c[j] * c[j];
    }
    EXPECT_NEAR(sum, block, 1e-12);
  }
}

TEST(ConjunctionDual, Involution) {
  const MembershipTriple t{0.7, 0.9, 0.925, Conj};
  const MembershipTriple d = conjunction_dual(t);
  EXPECT_EQ(d.connective, Disj);
  EXPECT_NEAR(d.mu_a, 0.3, 1e-12);
  EXPECT_NEAR(d.mu_b, 0.1, 1e-12);
  EXPECT_NEAR(d.mu_combo, 0.075, 1e-12);
  const MembershipTriple back = conjunction_dual(d);
  EXPECT_EQ(back.connective, Conj);
  EXPECT_DOUBLE_EQ(back.mu_combo, t.mu_combo);
}

}  // namespace

#include "qconcept/realspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace qc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;

double root_or_zero(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

Eigen::MatrixXd as_columns(std::size_t n, const std::vector<std::vector<double>>& basis,
                           bool& ok) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != n) {
      ok = false;
      return m;
    }
    for (std::size_t i = 0; i < n; ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[j][i];
    }
  }
  return m;
}

bool orthonormal(const Eigen::MatrixXd& u, double tol) {
  if (u.cols() == 0) return true;
  const Eigen::MatrixXd g = u.transpose() * u;
  return (g - Eigen::MatrixXd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

double projected_weight(const Eigen::MatrixXd& u, const Eigen::VectorXd& x) {
  if (u.cols() == 0) return 0.0;
  return (u.transpose() * x).squaredNorm();
}

}  // namespace

bool is_valid(const PairAngles& a) {
  return std::isfinite(a.theta_deg) && std::isfinite(a.phi_deg) && a.theta_deg > 0.0 &&
         a.theta_deg < 180.0 && a.phi_deg >= 0.0 && a.phi_deg <= 90.0;
}

std::string_view to_string(RealspaceError e) {
  switch (e) {
    case RealspaceError::NotClassical: return "not_classical";
    case RealspaceError::NegativeRadicand: return "negative_radicand";
    case RealspaceError::Infeasible: return "infeasible";
    case RealspaceError::InvalidSubspace: return "invalid_subspace";
  }
  return "unknown";
}

Expected<R4Vector, RealspaceError> classical_vector(const MembershipTriple& t, double eps) {
  std::array<double, 4> rad{};
  if (t.connective == Connective::Conjunction) {
    rad = {t.mu_combo, t.mu_a - t.mu_combo, t.mu_b - t.mu_combo,
           1.0 - t.mu_a - t.mu_b + t.mu_combo};
  } else {
    rad = {t.mu_a + t.mu_b - t.mu_combo, t.mu_combo - t.mu_b, t.mu_combo - t.mu_a,
           1.0 - t.mu_combo};
  }
  R4Vector v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (rad[i] < -eps) return RealspaceError::NotClassical;
    v[i] = root_or_zero(rad[i]);
  }
  return v;
}

MembershipTriple reconstruct_from_vector(const R4Vector& v, Connective c) {
  const double ab = v[0] * v[0], ab_ = v[1] * v[1], a_b = v[2] * v[2];
  MembershipTriple t;
  t.connective = c;
  t.mu_a = ab + ab_;
  t.mu_b = ab + a_b;
  t.mu_combo = c == Connective::Conjunction ? ab : ab + ab_ + a_b;
  return t;
}

double quantum_logic_factor_unchecked(const MembershipTriple& t, double theta_deg,
                                      SignPair s) {
  const double a = t.mu_a - t.mu_combo;
  const double b = t.mu_b - t.mu_combo;
  const double th = theta_deg * kDegToRad;
  const double sa = s.a * root_or_zero(a);
  const double sb = s.b * root_or_zero(b);
  const double sin_t = std::sin(th);
  return 1.0 - t.mu_combo - (a + b - 2.0 * sa * sb * std::cos(th)) / (sin_t * sin_t);
}

Expected<double, RealspaceError> quantum_logic_factor(const MembershipTriple& t,
                                                      double theta_deg, SignPair s,
                                                      double eps) {
  if (t.mu_a - t.mu_combo < -eps || t.mu_b - t.mu_combo < -eps) {
    return RealspaceError::NegativeRadicand;
  }
  return quantum_logic_factor_unchecked(t, theta_deg, s);
}

Expected<std::vector<ThetaInterval>, RealspaceError> theta_feasible_intervals(
    const MembershipTriple& t, double eps) {
  const double a = t.mu_a - t.mu_combo;
  const double b = t.mu_b - t.mu_combo;
  if (a < -eps || b < -eps) return RealspaceError::NegativeRadicand;
  const double denom = 1.0 - t.mu_combo;
  if (denom <= eps) return RealspaceError::Infeasible;

  const double rab = root_or_zero(a) * root_or_zero(b);
  const double rd = root_or_zero((1.0 - t.mu_a) * (1.0 - t.mu_b));
  std::vector<ThetaInterval> out;
  const int products = rab > 0.0 ? 2 : 1;
  for (int p = 0; p < products; ++p) {
    const int sign = p == 0 ? +1 : -1;
    const double lo = (sign * rab - rd) / denom;
    const double hi = (sign * rab + rd) / denom;
    if (lo > 1.0 + eps || hi < -1.0 - eps) continue;
    ThetaInterval iv;
    iv.signs = {+1, sign};
    iv.lo_deg = std::acos(std::clamp(hi, -1.0, 1.0)) / kDegToRad;
    iv.hi_deg = std::acos(std::clamp(lo, -1.0, 1.0)) / kDegToRad;
    out.push_back(iv);
  }
  return out;
}

Expected<R4Vector, RealspaceError> ktype_vector(const MembershipTriple& t, double theta_deg,
                                                SignPair s, double eps) {
  const double a = t.mu_a - t.mu_combo;
  const double b = t.mu_b - t.mu_combo;
  if (a < -eps || b < -eps || t.mu_combo < -eps) return RealspaceError::NegativeRadicand;
  const double q = quantum_logic_factor_unchecked(t, theta_deg, s);
  if (q < -eps) return RealspaceError::Infeasible;

  const double th = theta_deg * kDegToRad;
  const double plus = kPi / 4.0 + th / 2.0;
  const double minus = kPi / 4.0 - th / 2.0;
  const double sa = s.a * root_or_zero(a);
  const double sb = s.b * root_or_zero(b);
  const double sin_t = std::sin(th);
  R4Vector v{};
  v[0] = root_or_zero(t.mu_combo);
  v[1] = (sa * std::cos(minus) - sb * std::cos(plus)) / sin_t;
  v[2] = (sb * std::sin(plus) - sa * std::sin(minus)) / sin_t;
  v[3] = root_or_zero(q);
  return v;
}

TiltedSubspaces ktype_subspaces(double theta_deg) {
  const double th = theta_deg * kDegToRad;
  const double plus = kPi / 4.0 + th / 2.0;
  const double minus = kPi / 4.0 - th / 2.0;
  TiltedSubspaces s;
  s.a = {{1, 0, 0, 0}, {0, std::sin(plus), std::cos(plus), 0}};
  s.b = {{1, 0, 0, 0}, {0, std::sin(minus), std::cos(minus), 0}};
  return s;
}

Expected<MeetJoinWeights, RealspaceError> meet_join_check(
    std::size_t n, const std::vector<std::vector<double>>& subspace_a,
    const std::vector<std::vector<double>>& subspace_b, const std::vector<double>& x,
    double eps) {
  bool ok = x.size() == n && n > 0;
  const Eigen::MatrixXd ua = as_columns(n, subspace_a, ok);
  const Eigen::MatrixXd ub = as_columns(n, subspace_b, ok);
  if (!ok || !orthonormal(ua, 1e-9) || !orthonormal(ub, 1e-9)) {
    return RealspaceError::InvalidSubspace;
  }
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(n));

  // Principal vectors with unit cosine span the intersection.
  Eigen::MatrixXd meet(static_cast<Eigen::Index>(n), 0);
  if (ua.cols() > 0 && ub.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ua.transpose() * ub, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    Eigen::Index k = 0;
    while (k < sv.size() && sv(k) > 1.0 - 1e-8) ++k;
    meet = ua * svd.matrixU().leftCols(k);
  }

  // Orthonormal basis of the column space of [ua ub].
  Eigen::MatrixXd join(static_cast<Eigen::Index>(n), 0);
  if (ua.cols() + ub.cols() > 0) {
    Eigen::MatrixXd both(static_cast<Eigen::Index>(n), ua.cols() + ub.cols());
    both << ua, ub;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(both, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > 1e-8) ++r;
    join = svd.matrixU().leftCols(r);
  }

  MeetJoinWeights w;
  w.mu_a = projected_weight(ua, xv);
  w.mu_b = projected_weight(ub, xv);
  w.mu_meet = projected_weight(meet, xv);
  w.mu_join = projected_weight(join, xv);
  w.delta_c = w.mu_meet - std::min(w.mu_a, w.mu_b);
  w.delta_d = std::max(w.mu_a, w.mu_b) - w.mu_join;
  w.conj_ok = w.delta_c <= eps;
  w.disj_ok = w.delta_d <= eps;
  return w;
}

Matrix8 emergent_rotation(double phi_deg) {
  const double phi = phi_deg * kDegToRad;
  const double c = std::cos(phi), s = std::sin(phi);
  const double h = 1.0 / std::sqrt(2.0);

  Eigen::Matrix<double, 8, 8> bisec = Eigen::Matrix<double, 8, 8>::Identity();
  Eigen::Matrix<double, 8, 1> e5 = Eigen::Matrix<double, 8, 1>::Zero();
  Eigen::Matrix<double, 8, 1> mid = Eigen::Matrix<double, 8, 1>::Zero();
  e5(4) = 1.0;
  mid(5) = h;
  mid(6) = h;
  bisec += (c - 1.0) * (e5 * e5.transpose() + mid * mid.transpose()) +
           s * (mid * e5.transpose() - e5 * mid.transpose());

  Eigen::Matrix<double, 8, 8> quarter = Eigen::Matrix<double, 8, 8>::Identity();
  quarter(5, 5) = 0.0;
  quarter(7, 7) = 0.0;
  quarter(7, 5) = 1.0;   // e6 -> e8
  quarter(5, 7) = -1.0;  // e8 -> -e6

  const Eigen::Matrix<double, 8, 8> r = bisec * quarter;
  Matrix8 out{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) out[static_cast<std::size_t>(i * 8 + j)] = r(i, j);
  }
  return out;
}

std::array<double, 4> emergent_coordinates(const std::array<double, 8>& x, double phi_deg) {
  const double phi = phi_deg * kDegToRad;
  const double c = std::cos(phi), s = std::sin(phi);
  const double h = 1.0 / std::sqrt(2.0);
  const double x5 = x[4], x6 = x[5], x7 = x[6], x8 = x[7];
  return {x5 * c + (x6 + x7) * h * s,
          x8,
          -x5 * s * h + x6 * (c - 1.0) / 2.0 + x7 * (c + 1.0) / 2.0,
          x5 * s * h - x6 * (c + 1.0) / 2.0 - x7 * (c - 1.0) / 2.0};
}

MembershipTriple conjunction_dual(const MembershipTriple& t) { return complement_dual(t); }

}  // namespace qc

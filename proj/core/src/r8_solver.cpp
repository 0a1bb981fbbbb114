#include "qconcept/r8_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace qc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTangentTol = 1e-10;

double sq(double v) { return v * v; }
double root_or_zero(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

// Frame geometry: the tilted directions e_A, e_B live in the (x6, x7) plane.
struct Geometry {
  double sin_t, cos_t, sin_a, cos_a, sin_b, cos_b, cos_p, sin_p;

  explicit Geometry(const PairAngles& g) {
    const double th = g.theta_deg * kDegToRad;
    const double ph = g.phi_deg * kDegToRad;
    const double alpha = kPi / 4.0 + th / 2.0;
    const double beta = kPi / 4.0 - th / 2.0;
    sin_t = std::sin(th);
    cos_t = std::cos(th);
    sin_a = std::sin(alpha);
    cos_a = std::cos(alpha);
    sin_b = std::sin(beta);
    cos_b = std::cos(beta);
    cos_p = std::cos(ph);
    sin_p = std::sin(ph);
  }

  double proj_a(double x6, double x7) const { return x6 * sin_a + x7 * cos_a; }
  double proj_b(double x6, double x7) const { return x6 * sin_b + x7 * cos_b; }
  double c5(double x5, double x6, double x7) const {
    return x5 * cos_p + (x6 + x7) * kInvSqrt2 * sin_p;
  }
};

// Relabelling between a conjunction vector and the vector of its dual
// disjunction: x = (y4, y3, y2, y1, y8, -y7, y6, y5) in one-based indices.
R8Vector from_dual(const R8Vector& y) {
  return {y[3], y[2], y[1], y[0], y[7], -y[6], y[5], y[4]};
}
R8Vector to_dual(const R8Vector& x) {
  return {x[3], x[2], x[1], x[0], x[7], x[6], -x[5], x[4]};
}

// Residuals in the disjunction frame, modularity and target in product form.
Eigen::VectorXd disj_residuals(const R8Vector& y, const Geometry& g, const MembershipTriple& t,
                               double target) {
  const double ya = g.proj_a(y[5], y[6]);
  const double yb = g.proj_b(y[5], y[6]);
  const double c5 = g.c5(y[4], y[5], y[6]);
  const double ca = sq(y[0]) + sq(y[1]);
  const double cb = sq(y[0]) + sq(y[2]);
  const double cc = ca + sq(y[2]);
  const double ct = cc + sq(y[3]);
  double norm = 0.0;
  for (double v : y) norm += v * v;
  Eigen::VectorXd r(6);
  r << ca + sq(y[4]) + sq(ya) - t.mu_a, cb + sq(y[4]) + sq(yb) - t.mu_b,
      cc + sq(c5) + sq(y[7]) - t.mu_combo, norm - 1.0, t.mu_a * cb - t.mu_b * ca,
      cc - target * ct;
  return r;
}

Eigen::MatrixXd disj_jacobian(const R8Vector& y, const Geometry& g, const MembershipTriple& t,
                              double target) {
  const double ya = g.proj_a(y[5], y[6]);
  const double yb = g.proj_b(y[5], y[6]);
  const double c5 = g.c5(y[4], y[5], y[6]);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 8);
  // mu_A
  j(0, 0) = 2 * y[0];
  j(0, 1) = 2 * y[1];
  j(0, 4) = 2 * y[4];
  j(0, 5) = 2 * ya * g.sin_a;
  j(0, 6) = 2 * ya * g.cos_a;
  // mu_B
  j(1, 0) = 2 * y[0];
  j(1, 2) = 2 * y[2];
  j(1, 4) = 2 * y[4];
  j(1, 5) = 2 * yb * g.sin_b;
  j(1, 6) = 2 * yb * g.cos_b;
  // mu_combo
  j(2, 0) = 2 * y[0];
  j(2, 1) = 2 * y[1];
  j(2, 2) = 2 * y[2];
  j(2, 4) = 2 * c5 * g.cos_p;
  j(2, 5) = 2 * c5 * kInvSqrt2 * g.sin_p;
  j(2, 6) = 2 * c5 * kInvSqrt2 * g.sin_p;
  j(2, 7) = 2 * y[7];
  // norm
  for (int i = 0; i < 8; ++i) j(3, i) = 2 * y[static_cast<std::size_t>(i)];
  // modularity
  j(4, 0) = 2 * y[0] * (t.mu_a - t.mu_b);
  j(4, 1) = -2 * y[1] * t.mu_b;
  j(4, 2) = 2 * y[2] * t.mu_a;
  // classical target
  j(5, 0) = 2 * y[0] * (1 - target);
  j(5, 1) = 2 * y[1] * (1 - target);
  j(5, 2) = 2 * y[2] * (1 - target);
  j(5, 3) = -2 * y[3] * target;
  return j;
}

// Minimum-norm Gauss-Newton steps; zero components stay zero because every
// residual is even in each coordinate.
void polish(R8Vector& y, const Geometry& g, const MembershipTriple& t, double target,
            std::size_t& budget) {
  Eigen::VectorXd r = disj_residuals(y, g, t, target);
  for (int it = 0; it < 20 && budget > 0; ++it, --budget) {
    if (r.cwiseAbs().maxCoeff() <= 1e-16) break;
    const Eigen::MatrixXd j = disj_jacobian(y, g, t, target);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(j);
    cod.setThreshold(1e-10);
    const Eigen::VectorXd step = cod.solve(-r);
    R8Vector trial = y;
    for (std::size_t i = 0; i < 8; ++i) trial[i] += step(static_cast<Eigen::Index>(i));
    const Eigen::VectorXd rt = disj_residuals(trial, g, t, target);
    if (rt.cwiseAbs().maxCoeff() >= r.cwiseAbs().maxCoeff()) break;
    y = trial;
    r = rt;
  }
}

struct Candidate {
  R8Vector y{};
  double total_c = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

struct Scan {
  const MembershipTriple& t;
  const Geometry& g;
  double target;
  const R8Options& opt;
  std::size_t budget;
  double best_residual = std::numeric_limits<double>::infinity();

  double s_max() const { return std::max(0.0, std::min(t.mu_a, t.mu_b)); }

  // 1 - |z|^2 with z8 = 0 for a quantum unit vector with z5^2 = s.
  double gap(double s, int sign) {
    if (budget > 0) --budget;
    const double a = std::max(t.mu_a - s, 0.0);
    const double b = std::max(t.mu_b - s, 0.0);
    const double n67 = (a + b - 2.0 * sign * std::sqrt(a * b) * g.cos_t) / sq(g.sin_t);
    return s + n67 - 1.0;
  }

  double golden_min_abs(double lo, double hi, int sign, double& at) {
    constexpr double r = 0.61803398874989484820;
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = std::abs(gap(x1, sign)), f2 = std::abs(gap(x2, sign));
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - r * (hi - lo);
        f1 = std::abs(gap(x1, sign));
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + r * (hi - lo);
        f2 = std::abs(gap(x2, sign));
      }
    }
    at = f1 < f2 ? x1 : x2;
    return std::min(f1, f2);
  }

  std::vector<double> roots(int sign) {
    std::vector<double> out;
    const double hi = s_max();
    const std::size_t n = hi > 0.0 ? std::max<std::size_t>(opt.scan_points, 2) : 1;
    std::vector<double> s(n + 1), v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s[i] = hi * static_cast<double>(i) / static_cast<double>(n);
      v[i] = gap(s[i], sign);
      best_residual = std::min(best_residual, std::abs(v[i]));
    }
    auto push = [&](double r) {
      for (double e : out) {
        if (std::abs(e - r) <= 1e-12) return;
      }
      out.push_back(r);
    };
    for (std::size_t i = 0; i <= n; ++i) {
      if (v[i] == 0.0) push(s[i]);
      if (i < n && v[i] * v[i + 1] < 0.0) {
        double lo = s[i], up = s[i + 1], flo = v[i];
        for (int k = 0; k < 200 && up - lo > 1e-17; ++k) {
          const double mid = 0.5 * (lo + up);
          const double fm = gap(mid, sign);
          if (fm == 0.0) {
            lo = up = mid;
            break;
          }
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            up = mid;
          }
        }
        push(0.5 * (lo + up));
      }
      // Touching roots do not change sign.
      const double here = std::abs(v[i]);
      const bool left = i == 0 || here <= std::abs(v[i - 1]);
      const bool right = i == n || here <= std::abs(v[i + 1]);
      if (left && right && here > 0.0 && here < 1e-3 && n > 1) {
        const double lo = s[i == 0 ? 0 : i - 1];
        const double up = s[i == n ? n : i + 1];
        double at = s[i];
        if (golden_min_abs(lo, up, sign, at) <= kTangentTol) push(at);
      }
    }
    return out;
  }

  // Full vector from a quantum unit vector z, provided Q lies in (0, 1].
  std::optional<Candidate> build(double z5, double za, double zb, double z8) const {
    const double z6 = (za * g.cos_b - zb * g.cos_a) / g.sin_t;
    const double z7 = (zb * g.sin_a - za * g.sin_b) / g.sin_t;
    const double q = sq(g.c5(z5, z6, z7)) + sq(z8);
    if (std::abs(q - target) < 1e-14) return std::nullopt;
    double quantum = (t.mu_combo - target) / (q - target);
    if (!(quantum > 0.0) || quantum > 1.0 + 1e-12) return std::nullopt;
    quantum = std::min(quantum, 1.0);
    const double total_c = 1.0 - quantum;
    const double rq = std::sqrt(quantum);
    Candidate c;
    c.total_c = total_c;
    c.y = {root_or_zero(total_c * (t.mu_a + t.mu_b - target)),
           root_or_zero(total_c * (target - t.mu_b)),
           root_or_zero(total_c * (target - t.mu_a)),
           root_or_zero(total_c * (1.0 - target)),
           rq * z5,
           rq * z6,
           rq * z7,
           rq * z8};
    return c;
  }

  void finish(Candidate& c) {
    polish(c.y, g, t, target, budget);
    c.residual = disj_residuals(c.y, g, t, target).cwiseAbs().maxCoeff();
    best_residual = std::min(best_residual, c.residual);
  }

  template <class Fn>
  void each_sign(double s, int sign, double z8, Fn&& fn) const {
    const double z5 = root_or_zero(s);
    const double ra = root_or_zero(t.mu_a - s);
    const double rb = root_or_zero(t.mu_b - s);
    for (int sa : {+1, -1}) {
      if (sa < 0 && ra == 0.0) continue;
      if (auto c = build(z5, sa * ra, sign * sa * rb, z8)) fn(*c);
    }
  }

  void expand(double s, int sign, std::vector<Candidate>& out) {
    each_sign(s, sign, 0.0, [&](Candidate c) {
      finish(c);
      out.push_back(c);
    });
  }

  // Lets x8 absorb the norm deficit and keeps it as small as feasibility allows.
  void with_x8(std::vector<Candidate>& out) {
    const double hi = s_max();
    const std::size_t n = hi > 0.0 ? std::max<std::size_t>(opt.scan_points, 2) : 0;
    std::vector<std::pair<double, Candidate>> pool;
    for (int sign : {+1, -1}) {
      for (std::size_t i = 0; i <= n; ++i) {
        const double s = n == 0 ? hi : hi * static_cast<double>(i) / static_cast<double>(n);
        const double deficit = -gap(s, sign);
        if (deficit < 0.0) continue;
        each_sign(s, sign, std::sqrt(deficit), [&](const Candidate& c) {
          pool.emplace_back(deficit, c);
        });
      }
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [deficit, c] : pool) {
      finish(c);
      if (c.residual <= opt.tolerance) {
        out.push_back(c);
        return;
      }
    }
  }
};

Expected<R8Solution, R8Failure> solve_disjunction(const MembershipTriple& t,
                                                  const PairAngles& angles, double target,
                                                  const R8Options& opt) {
  const Geometry g(angles);
  Scan scan{t, g, target, opt, opt.max_iterations};

  std::vector<Candidate> found;
  if (std::abs(t.mu_combo - target) <= opt.tolerance) {
    Candidate c;
    c.total_c = 1.0;
    c.y = {root_or_zero(t.mu_a + t.mu_b - target), root_or_zero(target - t.mu_b),
           root_or_zero(target - t.mu_a), root_or_zero(1.0 - target), 0, 0, 0, 0};
    c.residual = disj_residuals(c.y, g, t, target).cwiseAbs().maxCoeff();
    found.push_back(c);
  } else {
    for (int sign : {+1, -1}) {
      for (double s : scan.roots(sign)) scan.expand(s, sign, found);
    }
    const bool any = std::any_of(found.begin(), found.end(), [&](const Candidate& c) {
      return c.residual <= opt.tolerance;
    });
    if (!any && opt.allow_x8) scan.with_x8(found);
  }
  if (scan.budget == 0) return R8Failure{R8Error::NoSolution, scan.best_residual};

  const Candidate* pick = nullptr;
  for (const Candidate& c : found) {
    if (c.residual > opt.tolerance) continue;
    if (pick == nullptr || c.total_c > pick->total_c + 1e-12) pick = &c;
  }
  if (pick == nullptr) return R8Failure{R8Error::NoSolution, scan.best_residual};

  R8Solution sol;
  sol.x = pick->y;
  sol.angles = angles;
  sol.connective = Connective::Disjunction;
  sol.classical_target = target;
  return sol;
}

}  // namespace

std::string_view to_string(R8Error e) {
  switch (e) {
    case R8Error::InvalidAngles: return "invalid_angles";
    case R8Error::InvalidTriple: return "invalid_triple";
    case R8Error::NoSolution: return "no_solution";
  }
  return "unknown";
}

double classical_combo_target(const MembershipTriple& t, double eps) {
  const Label l = classify(t, eps).label;
  if (t.connective == Connective::Disjunction) {
    const double upper = std::min(1.0, t.mu_a + t.mu_b);
    switch (l) {
      case Label::DeltaNonclassical: return std::max(t.mu_a, t.mu_b);
      case Label::KNonclassical: return upper;
      case Label::Classical: return 0.5 * (t.mu_combo + upper);
    }
  }
  const double lower = std::max(0.0, t.mu_a + t.mu_b - 1.0);
  switch (l) {
    case Label::DeltaNonclassical: return std::min(t.mu_a, t.mu_b);
    case Label::KNonclassical: return lower;
    case Label::Classical: return 0.5 * (t.mu_combo + lower);
  }
  return 0.0;
}

R8Derived r8_derived(const R8Vector& x, const PairAngles& angles, Connective c) {
  const Geometry g(angles);
  R8Derived d;
  d.x_a = g.proj_a(x[5], x[6]);
  d.x_a_perp = x[5] * g.cos_a - x[6] * g.sin_a;
  d.x_b = g.proj_b(x[5], x[6]);
  d.x_b_perp = x[5] * g.cos_b - x[6] * g.sin_b;
  if (c == Connective::Disjunction) {
    d.c = emergent_coordinates(x, angles.phi_deg);
  } else {
    const auto e = emergent_coordinates(to_dual(x), angles.phi_deg);
    d.c = {e[2], e[3], e[0], e[1]};
  }
  return d;
}

std::vector<double> r8_residuals(const R8Vector& x, const PairAngles& angles,
                                 const MembershipTriple& t,
                                 std::optional<double> modularity_target) {
  const R8Derived d = r8_derived(x, angles, t.connective);
  const double ca = sq(x[0]) + sq(x[1]);
  const double cb = sq(x[0]) + sq(x[2]);
  const double cc = t.connective == Connective::Conjunction ? sq(x[0]) : ca + sq(x[2]);
  const double ct = ca + sq(x[2]) + sq(x[3]);
  double norm = 0.0;
  for (double v : x) norm += v * v;
  std::vector<double> r = {ca + sq(x[4]) + sq(d.x_a) - t.mu_a,
                           cb + sq(x[4]) + sq(d.x_b) - t.mu_b,
                           cc + sq(d.c[0]) + sq(d.c[1]) - t.mu_combo,
                           norm - 1.0,
                           t.mu_a * cb - t.mu_b * ca};
  if (modularity_target) {
    r.push_back(ct > 0.0 ? cc / ct - *modularity_target : 0.0);
  }
  return r;
}

RelativeWeights relative_weights(const R8Solution& s, Connective c, double eps) {
  const auto& x = s.x;
  const R8Derived& d = s.derived;
  RelativeWeights w;
  w.mu_c_total = sq(x[0]) + sq(x[1]) + sq(x[2]) + sq(x[3]);
  w.mu_q_total = sq(x[4]) + sq(x[5]) + sq(x[6]) + sq(x[7]);
  const double ca = sq(x[0]) + sq(x[1]);
  const double cb = sq(x[0]) + sq(x[2]);
  const double cc = c == Connective::Conjunction ? sq(x[0]) : ca + sq(x[2]);
  const double qa = sq(x[4]) + sq(d.x_a);
  const double qb = sq(x[4]) + sq(d.x_b);
  const double qc = sq(d.c[0]) + sq(d.c[1]);
  if (w.mu_c_total > eps) {
    w.mu_c_r = std::array<double, 3>{ca / w.mu_c_total, cb / w.mu_c_total, cc / w.mu_c_total};
  }
  if (w.mu_q_total > eps) {
    w.mu_q_r = std::array<double, 3>{qa / w.mu_q_total, qb / w.mu_q_total, qc / w.mu_q_total};
  }
  return w;
}

Expected<R8Solution, R8Failure> solve_r8(const MembershipTriple& t, const PairAngles& angles,
                                         const R8Options& options) {
  if (!is_valid(angles)) return R8Failure{R8Error::InvalidAngles, 0.0};
  if (!is_valid(t)) return R8Failure{R8Error::InvalidTriple, 0.0};

  const bool conj = t.connective == Connective::Conjunction;
  const MembershipTriple frame = conj ? complement_dual(t) : t;
  auto solved = solve_disjunction(frame, angles, classical_combo_target(frame), options);
  if (!solved) return solved;

  R8Solution sol = *solved;
  if (conj) {
    sol.x = from_dual(sol.x);
    sol.connective = Connective::Conjunction;
    sol.classical_target = 1.0 - sol.classical_target;
  }
  sol.derived = r8_derived(sol.x, angles, sol.connective);
  const auto r = r8_residuals(sol.x, angles, t, sol.classical_target);
  sol.residual = 0.0;
  for (double v : r) sol.residual = std::max(sol.residual, std::abs(v));
  if (sol.residual > options.tolerance) {
    return R8Failure{R8Error::NoSolution, sol.residual};
  }
  sol.relative_weights = relative_weights(sol, sol.connective);
  return sol;
}

}  // namespace qc

#include <cmath>
#include <limits>

#include "qconcept/parallel.hpp"
#include "qconcept/r8_solver.hpp"

namespace qc {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Grid {
  double start;
  double step;
  std::size_t count;
  double at(std::size_t i) const { return start + step * static_cast<double>(i); }
};

Grid phi_grid(double step) {
  return {0.0, step, static_cast<std::size_t>(std::floor(90.0 / step + 1e-9)) + 1};
}

// Smallest phi index feasible at theta, scanning sequentially.
std::size_t first_phi(const std::vector<MembershipTriple>& items, double theta,
                      const Grid& phis, const R8Options& opt) {
  for (std::size_t j = 0; j < phis.count; ++j) {
    if (angles_feasible(items, {theta, phis.at(j)}, opt)) return j;
  }
  return kNone;
}

// Same, with the phi scan spread over threads.
std::size_t first_phi_parallel(const std::vector<MembershipTriple>& items, double theta,
                               const Grid& phis, const R8Options& opt, unsigned jobs) {
  std::vector<char> ok(phis.count, 0);
  parallel_for(phis.count, jobs, [&](std::size_t j) {
    ok[j] = angles_feasible(items, {theta, phis.at(j)}, opt) ? 1 : 0;
  });
  for (std::size_t j = 0; j < phis.count; ++j) {
    if (ok[j]) return j;
  }
  return kNone;
}

}  // namespace

std::string_view to_string(FitError e) {
  switch (e) {
    case FitError::EmptyInput: return "empty_input";
    case FitError::MixedConnectives: return "mixed_connectives";
    case FitError::NoFeasibleAngles: return "no_feasible_angles";
  }
  return "unknown";
}

bool angles_feasible(const std::vector<MembershipTriple>& items, const PairAngles& angles,
                     const R8Options& options, double* summed_residual) {
  double sum = 0.0;
  for (const auto& t : items) {
    auto s = solve_r8(t, angles, options);
    if (!s) return false;
    sum += s->residual;
  }
  if (summed_residual != nullptr) *summed_residual = sum;
  return true;
}

Expected<PairFit, FitError> fit_pair_angles(const std::vector<MembershipTriple>& items,
                                            Connective c, const FitOptions& options) {
  if (items.empty()) return FitError::EmptyInput;
  for (const auto& t : items) {
    if (t.connective != c) return FitError::MixedConnectives;
  }
  const R8Options& opt = options.solver;
  const unsigned jobs = std::max(1u, options.jobs);

  // Coarse pass, rows of theta in ascending order.
  const double coarse = options.coarse_step_deg;
  const auto rows = static_cast<std::size_t>(std::floor((180.0 - 1e-9) / coarse));
  const Grid thetas{coarse, coarse, rows};
  const Grid coarse_phi = phi_grid(coarse);
  std::size_t row = kNone;
  std::size_t row_phi = kNone;
  for (std::size_t base = 0; base < thetas.count && row == kNone; base += jobs) {
    const std::size_t n = std::min<std::size_t>(jobs, thetas.count - base);
    std::vector<std::size_t> hit(n, kNone);
    parallel_for(n, jobs, [&](std::size_t k) {
      hit[k] = first_phi(items, thetas.at(base + k), coarse_phi, opt);
    });
    for (std::size_t k = 0; k < n; ++k) {
      if (hit[k] != kNone) {
        row = base + k;
        row_phi = hit[k];
        break;
      }
    }
  }
  if (row == kNone) return FitError::NoFeasibleAngles;

  // Fine pass over the last coarse cell below the first feasible row.
  const double fine = options.fine_step_deg;
  const Grid fine_phi = phi_grid(fine);
  const double theta_c = thetas.at(row);
  const auto per_cell = static_cast<std::size_t>(std::llround(coarse / fine));
  std::vector<double> fine_thetas;
  for (std::size_t k = 0; k <= per_cell; ++k) {
    const double th = theta_c - coarse + fine * static_cast<double>(k);
    if (th > 0.0) fine_thetas.push_back(th);
  }
  std::vector<std::size_t> fine_hit(fine_thetas.size(), kNone);
  parallel_for(fine_thetas.size(), jobs, [&](std::size_t k) {
    fine_hit[k] = first_phi(items, fine_thetas[k], fine_phi, opt);
  });
  std::size_t first = fine_thetas.size() - 1;
  for (std::size_t k = 0; k < fine_thetas.size(); ++k) {
    if (fine_hit[k] != kNone) {
      first = k;
      break;
    }
  }
  double theta_hi = fine_thetas[first];
  std::size_t phi_idx = fine_hit[first];
  if (phi_idx == kNone) {
    // The coarse hit is always on the fine grid; this guards rounding only.
    theta_hi = theta_c;
    phi_idx = static_cast<std::size_t>(std::llround(coarse_phi.at(row_phi) / fine));
  }

  // Bisection on theta against the infeasible neighbour.
  if (first > 0) {
    double theta_lo = fine_thetas[first - 1];
    while (theta_hi - theta_lo > options.precision_deg) {
      const double mid = 0.5 * (theta_lo + theta_hi);
      const std::size_t j = first_phi_parallel(items, mid, fine_phi, opt, jobs);
      if (j != kNone) {
        theta_hi = mid;
        phi_idx = j;
      } else {
        theta_lo = mid;
      }
    }
  }

  // Bisection on phi at the chosen theta.
  double phi_hi = fine_phi.at(phi_idx);
  if (phi_idx > 0) {
    double phi_lo = fine_phi.at(phi_idx - 1);
    while (phi_hi - phi_lo > options.precision_deg) {
      const double mid = 0.5 * (phi_lo + phi_hi);
      if (angles_feasible(items, {theta_hi, mid}, opt)) {
        phi_hi = mid;
      } else {
        phi_lo = mid;
      }
    }
  }

  PairFit fit;
  fit.angles = {theta_hi, phi_hi};
  angles_feasible(items, fit.angles, opt, &fit.summed_residual);
  return fit;
}

}  // namespace qc

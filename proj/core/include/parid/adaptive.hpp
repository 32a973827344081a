#ifndef PARID_ADAPTIVE_HPP
#define PARID_ADAPTIVE_HPP

#include <parid/tikhonov.hpp>

namespace parid {

/// Configuration of the a-posteriori balancing-principle parameter choice:
/// geometric grid alpha_i = mu^{2i} delta^2 (d+2)^2 and the 4C/mu^j
/// distance rule.
struct AdaptiveConfig {
  double delta = 0.0;     // noise level feeding the grid anchor
  double mu = 1.5;        // grid ratio, > 1
  int grid_size = 8;      // N; the grid has N+1 points
  int dim = 1;            // spatial dimension d
  double c = 1.0;         // selection constant C
  std::optional<double> gamma; // when set, requires alpha_0 <= gamma (>= ||T||^2)

  // Optional power source family phi(lambda) = lambda^nu for the rate
  // diagnostic.
  std::optional<double> nu;
  std::optional<double> rho;
};

struct AdaptiveResult {
  std::vector<double> grid;
  std::vector<TikhonovSolution> solutions;
  int selected = 0;              // k
  Eigen::MatrixXd distances;     // ||B~_i - B~_j|| table, for audit
  double error_bound = 0.0;      // 6C/mu^k form
  std::optional<double> rate;    // Psi^{-1}(delta) when (nu, rho) supplied
};

/// alpha_i = mu^{2i} delta^2 (d+2)^2, i = 0..N. Throws when mu <= 1 or when
/// gamma is supplied and alpha_0 > gamma.
std::vector<double> build_alpha_grid(const AdaptiveConfig& cfg);

/// k = max{ i : ||B~_i - B~_j|| <= 4C/mu^j for all j <= i }, found by
/// scanning upward and stopping at the first violation. Distances in the
/// coefficient-space (frobenius L2) norm.
AdaptiveResult select_adaptive(std::vector<TikhonovSolution> solutions,
                               double c, double mu);

/// Closed-form Psi^{-1}(delta) for phi(lambda) = lambda^nu:
///   lambda = (delta C (d+2) / rho)^{2 nu / (2 nu + 1)},
/// returned with the convergence bound 6 mu rho Psi^{-1}(delta).
struct RateDiagnostic {
  double psi_inverse = 0.0;
  double bound = 0.0;
};
RateDiagnostic rate_diagnostic(const AdaptiveConfig& cfg);

} // namespace parid

#endif

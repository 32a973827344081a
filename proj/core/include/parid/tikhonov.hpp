#ifndef PARID_TIKHONOV_HPP
#define PARID_TIKHONOV_HPP

#include <parid/coeff_basis.hpp>

namespace parid {

/// Dense normal equations (U + alpha D) c = b of the Galerkin-projected
/// Tikhonov problem over the matrix basis:
///   U_kl = <T E_k, T E_l>,  b_l = <rhs, T E_l>,  D = Gram of the basis.
/// U is built from inner products of T-images, so it is symmetric and PSD
/// by construction regardless of adjoint-discretization error.
struct NormalSystem {
  CoeffBasis basis;
  Eigen::MatrixXd u;            // n*d^2 square, symmetric PSD
  Eigen::MatrixXd d;            // identity for the orthonormal basis
  Eigen::VectorXd b;
  double rhs_norm = 0.0;        // ||rhs|| in spacetime L2
  bool degenerate = false;      // all T-images zero (grad w == 0)
  std::vector<SpaceTimeField> images; // cached T E_k

  int size() const { return static_cast<int>(b.size()); }
};

struct TikhonovSolution {
  double alpha = 0.0;
  Eigen::VectorXd coefficients;
  MatrixField reconstruction;   // sum_k c_k E_k
  double residual_norm = 0.0;   // ||T B~ - rhs||
  double solution_norm = 0.0;   // ||B~||
};

/// Applies T to every matrix basis element (one divergence-form solve each,
/// fanned out over `threads`) and fills U, D, b by discrete inner products.
NormalSystem assemble_normal_system(const LinearizedOperator& op,
                                    const CoeffBasis& basis,
                                    const SpaceTimeField& rhs,
                                    int threads = 1);

/// Solves (U + alpha D) c = b by LLT; alpha must be positive.
TikhonovSolution solve_at_alpha(const NormalSystem& sys, double alpha);

/// One solve per grid point, output order matching the ascending input grid.
std::vector<TikhonovSolution> solve_path(const NormalSystem& sys,
                                         const std::vector<double>& alphas);

} // namespace parid

#endif

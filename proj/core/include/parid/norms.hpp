#ifndef PARID_NORMS_HPP
#define PARID_NORMS_HPP

#include <parid/fields.hpp>

namespace parid {

enum class NormKind {
  L2,               // (v^T M v)^(1/2)
  H1,               // (v^T (M + K_I) v)^(1/2)
  GradLinf,         // max over elements of |grad v| (exact for P1)
  SpacetimeL2,      // trapezoid-in-time of level-wise L2^2
  MixedAssumption,  // spacetime L2 + (int ||grad u(.,t)||_inf^2 dt)^(1/2)
  FrobeniusL2       // (sum_ij ||entry_ij||_L2^2)^(1/2)
};

double norm(const ScalarField& f, NormKind kind);
double norm(const SpaceTimeField& f, NormKind kind);
double norm(const MatrixField& f, NormKind kind);

/// Trapezoid-in-time, mass-in-space inner product of two space-time fields.
double inner_spacetime(const SpaceTimeField& a, const SpaceTimeField& b);

/// Sum over entries of the L2(Omega) inner products (the coefficient-space
/// inner product behind FrobeniusL2).
double inner_frobenius(const MatrixField& a, const MatrixField& b);

/// Trapezoid quadrature weights of a time grid.
Eigen::VectorXd trapezoid_weights(const Eigen::VectorXd& times);

/// L2(Omega) inner product of two coefficient entry vectors sharing storage.
double entry_inner_l2(const Mesh& mesh, CoeffStorage storage,
                      const Eigen::VectorXd& a, const Eigen::VectorXd& b);

} // namespace parid

#endif

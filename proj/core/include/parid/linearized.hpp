#ifndef PARID_LINEARIZED_HPP
#define PARID_LINEARIZED_HPP

#include <parid/parabolic.hpp>

namespace parid {

/// The data-dependent linearization T_w mapping a d x d L2 coefficient
/// perturbation C to the solution of v_t - div(A0 grad v) = div(C grad w),
/// together with its adjoint and the norm bounds attached to it.
class LinearizedOperator {
public:
  /// c0: stability constant to cache; estimated from a default battery when
  /// not supplied.
  LinearizedOperator(MeshPtr mesh, Eigen::VectorXd times, MatrixField a0,
                     SpaceTimeField w,
                     std::optional<double> c0 = std::nullopt,
                     TimeScheme scheme = TimeScheme::ImplicitEuler);

  const MeshPtr& mesh() const { return mesh_; }
  const Eigen::VectorXd& times() const { return times_; }
  const MatrixField& base_coeff() const { return a0_; }
  const SpaceTimeField& linearization_point() const { return w_; }
  TimeScheme scheme() const { return scheme_; }
  double stability_constant() const { return c0_; }

  /// True when grad w vanishes identically: T is the zero map (the
  /// degenerate case the continuous theory excludes for exact data).
  bool degenerate() const { return degenerate_; }

  /// (int_0^tau ||grad w(.,t)||_inf^2 dt)^(1/2), exact element gradients,
  /// trapezoid in time.
  double gradient_linf_integral() const { return grad_integral_; }

  /// Element-wise gradients of w at time level m (element_count x dim).
  const Eigen::MatrixXd& gradient_table(int level) const { return grad_w_[level]; }

  /// T_w C: one divergence-form solve.
  SpaceTimeField apply(const MatrixField& c) const;

  /// T_w* phi = int_0^tau grad z (grad w)^T dt with z the backward solve;
  /// returned as a cellwise MatrixField (exact per element up to time
  /// quadrature).
  MatrixField apply_adjoint(const SpaceTimeField& phi) const;

  /// d sqrt(C0) (int ||grad w||_inf^2 dt)^(1/2), the cached operator bound.
  double norm_bound() const;

private:
  MeshPtr mesh_;
  Eigen::VectorXd times_;
  MatrixField a0_;
  SpaceTimeField w_;
  TimeScheme scheme_;
  double c0_ = 0.0;
  bool degenerate_ = false;
  double grad_integral_ = 0.0;
  std::vector<Eigen::MatrixXd> grad_w_;
};

/// Right-hand side of the operator perturbation estimate:
/// d sqrt(C0) (int ||grad u - grad u~||_inf^2 dt)^(1/2), evaluated discretely.
/// Requires both operators to share mesh, time grid and base coefficient.
double perturbation_bound(const LinearizedOperator& op_u,
                          const LinearizedOperator& op_v);

/// Element-wise gradient tables of a space-time field.
std::vector<Eigen::MatrixXd> gradient_tables(const SpaceTimeField& w);

} // namespace parid

#endif

#ifndef PARID_PARABOLIC_HPP
#define PARID_PARABOLIC_HPP

#include <parid/fields.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace parid {

enum class TimeScheme { ImplicitEuler, CrankNicolson };

/// Forward problem data: u_t - div(A grad u) = f, homogeneous Dirichlet,
/// u(.,0) = initial.
struct ProblemSpec {
  MeshPtr mesh;
  Eigen::VectorXd times;
  MatrixField coeff;                 // symmetric, elliptic
  std::optional<SpaceTimeField> source; // nodal f per level; empty means f = 0
  ScalarField initial;               // L2 datum, projected onto the P1 space
  TimeScheme scheme = TimeScheme::ImplicitEuler;
};

/// Time-stepped Galerkin solution of the forward problem. Level 0 carries
/// the initial datum; Dirichlet rows are eliminated at every step.
SpaceTimeField solve_forward(const ProblemSpec& spec);

/// v_t - div(A0 grad v) = div(C grad w), zero initial and boundary data.
/// The load is assembled weakly as F_i = -int_Omega C grad(w) . grad(phi_i).
SpaceTimeField solve_div_form(const MeshPtr& mesh, const Eigen::VectorXd& times,
                              const MatrixField& a0, const MatrixField& c,
                              const SpaceTimeField& w,
                              TimeScheme scheme = TimeScheme::ImplicitEuler);

/// z with z(.,tau) = 0 and z_t + div(A0 grad z) = phi, computed by the
/// substitution s = tau - t and a forward solve with source -phi(tau - s).
SpaceTimeField solve_backward(const MeshPtr& mesh, const Eigen::VectorXd& times,
                              const MatrixField& a0, const SpaceTimeField& phi,
                              TimeScheme scheme = TimeScheme::ImplicitEuler);

struct StabilityEstimate {
  double c0 = 0.0;
  std::string method = "sampled";
};

/// Sampled estimate of the constant in the a-priori bound
///   ||v||_{L2 H1} + ||v_t||_{L2 H-1} <= C0 (||f||_{L2 H-1} + ||h||_{L2}):
/// the max ratio over a seeded battery of random (f, h) pairs. A lower bound
/// on the true constant, used as its working estimate.
StabilityEstimate estimate_stability_constant(const MeshPtr& mesh,
                                              const Eigen::VectorXd& times,
                                              const MatrixField& a0,
                                              int battery_size,
                                              std::uint64_t seed = 991,
                                              TimeScheme scheme = TimeScheme::ImplicitEuler);

/// ||v||_{L2(0,tau;H1)} of a space-time field (trapezoid in time).
double spacetime_h1_norm(const SpaceTimeField& v);

/// Discrete ||v_t||_{L2(0,tau;H-1)}: difference quotients per interval,
/// Riesz dual norm in space, rectangle rule in time.
double spacetime_dual_time_derivative_norm(const SpaceTimeField& v);

/// ||f||_{L2(0,tau;H-1)} of a nodal space-time source (trapezoid in time).
double spacetime_dual_norm(const SpaceTimeField& f);

} // namespace parid

#endif

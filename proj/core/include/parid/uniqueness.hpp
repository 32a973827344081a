#ifndef PARID_UNIQUENESS_HPP
#define PARID_UNIQUENESS_HPP

#include <parid/fields.hpp>

#include <functional>
#include <string>
#include <vector>

namespace parid {

/// Spatial derivative data of the observed solution at one (point, time):
/// the gradient and the Hessian entries needed by the determinant test.
struct DerivativeSample {
  Eigen::VectorXd grad;    // dim
  Eigen::MatrixXd hessian; // dim x dim
};

/// Provider of derivatives: either analytic (exact) or recovered from a
/// nodal space-time field by patch-averaged gradient recovery.
class DerivativeProvider {
public:
  virtual ~DerivativeProvider() = default;
  virtual DerivativeSample at(const Eigen::VectorXd& x, double t) const = 0;
};

class AnalyticProvider final : public DerivativeProvider {
public:
  using GradFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>;
  using HessFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&, double)>;
  AnalyticProvider(GradFn g, HessFn h) : grad_(std::move(g)), hess_(std::move(h)) {}
  DerivativeSample at(const Eigen::VectorXd& x, double t) const override;

private:
  GradFn grad_;
  HessFn hess_;
};

/// Recovered derivatives: element gradients averaged to nodes (area
/// weighted), differentiated once more for the element-wise Hessian, with
/// linear interpolation between time levels.
class RecoveredProvider final : public DerivativeProvider {
public:
  explicit RecoveredProvider(SpaceTimeField field);
  DerivativeSample at(const Eigen::VectorXd& x, double t) const override;
  /// Element-indexed access used by the determinant scan.
  DerivativeSample at_element(int e, double t) const;

private:
  SpaceTimeField field_;
  // Per time level: recovered nodal gradients (node_count x dim) and
  // element-wise Hessians (element_count x dim*dim).
  std::vector<Eigen::MatrixXd> nodal_grad_;
  std::vector<Eigen::MatrixXd> elem_hess_;
  int locate_element(const Eigen::VectorXd& x) const;
  friend struct RecoveredAccess;
};

struct UniquenessReport {
  std::vector<double> times;          // the d^2(d+1) sample times
  Eigen::VectorXd determinant;        // per element
  Eigen::VectorXd scale;              // per-element Hadamard scale of D
  double min_abs = 0.0;
  double max_abs = 0.0;
  double below_fraction = 0.0;        // share of elements with |D| <= tol*scale
  double threshold_rel = 1e-10;
  std::string provider = "analytic";  // or "recovered"
};

/// Evaluates the block determinants D^k_ij from first and second spatial
/// derivatives at the d^2(d+1) sample times, then the d^2 x d^2 outer
/// determinant D, per element barycenter. The report carries |D| statistics
/// against a relative Hadamard scale rather than a boolean, since floating
/// point cannot certify measure-zero sets.
UniquenessReport uniqueness_determinant(const MeshPtr& mesh,
                                        const DerivativeProvider& provider,
                                        const std::vector<double>& times,
                                        double tau,
                                        const std::string& provider_tag = "analytic");

UniquenessReport uniqueness_determinant(const SpaceTimeField& data,
                                        const std::vector<double>& times);

/// Uniform interior default sample times: d^2(d+1) points in (0, tau).
std::vector<double> default_sample_times(int dim, double tau);

} // namespace parid

#endif

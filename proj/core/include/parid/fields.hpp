#ifndef PARID_FIELDS_HPP
#define PARID_FIELDS_HPP

#include <parid/mesh.hpp>

#include <functional>
#include <vector>

namespace parid {

/// Nodal P1 scalar field.
struct ScalarField {
  MeshPtr mesh;
  Eigen::VectorXd values;          // one value per node
  bool dirichlet_zero = false;     // zero on boundary nodes when set

  ScalarField() = default;
  ScalarField(MeshPtr m, Eigen::VectorXd v, bool dz = false);

  static ScalarField zero(MeshPtr m, bool dz = false);
  static ScalarField constant(MeshPtr m, double c);
  /// Nodal samples of an analytic function.
  static ScalarField sample(MeshPtr m, const std::function<double(const Eigen::VectorXd&)>& f);

  /// Zero out the boundary values and tag the field Dirichlet-zero.
  ScalarField& enforce_dirichlet();
};

/// A time grid 0 = t_0 < ... < t_M = tau with one nodal field per level.
struct SpaceTimeField {
  MeshPtr mesh;
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXd> levels;

  SpaceTimeField() = default;
  SpaceTimeField(MeshPtr m, Eigen::VectorXd t);
  SpaceTimeField(MeshPtr m, Eigen::VectorXd t, std::vector<Eigen::VectorXd> lv);

  int level_count() const { return static_cast<int>(levels.size()); }
  double tau() const { return times(times.size() - 1); }

  static SpaceTimeField zero(MeshPtr m, const Eigen::VectorXd& t);
  /// Nodal samples of an analytic space-time function.
  static SpaceTimeField sample(MeshPtr m, const Eigen::VectorXd& t,
                               const std::function<double(const Eigen::VectorXd&, double)>& f);

  SpaceTimeField& operator+=(const SpaceTimeField& other);
  SpaceTimeField& operator-=(const SpaceTimeField& other);
  SpaceTimeField& operator*=(double s);
};

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator*(double s, SpaceTimeField a);

/// Uniform time grid with `steps` intervals on [0, tau].
Eigen::VectorXd uniform_time_grid(double tau, int steps);

/// How a coefficient entry is carried: element-wise constant (the default
/// for reconstructed coefficients) or nodal P1 (for analytic inputs).
enum class CoeffStorage { Cellwise, Nodal };

/// d x d spatial coefficient field (houses A, A0, B, C and reconstructions).
struct MatrixField {
  MeshPtr mesh;
  int dim = 0;
  CoeffStorage storage = CoeffStorage::Cellwise;
  bool symmetric = false;
  std::vector<Eigen::VectorXd> entries; // dim*dim, row-major slot (i*dim + j)

  MatrixField() = default;
  MatrixField(MeshPtr m, CoeffStorage st, bool sym = false);

  Eigen::VectorXd& entry(int i, int j) { return entries[i * dim + j]; }
  const Eigen::VectorXd& entry(int i, int j) const { return entries[i * dim + j]; }

  /// Matrix value at the barycenter of element e (P1 entries averaged).
  Eigen::MatrixXd value_at_element(int e) const;

  /// Identity times c, cellwise.
  static MatrixField scaled_identity(MeshPtr m, double c);
  static MatrixField zero(MeshPtr m);
  /// Cellwise field from analytic entry functions evaluated at barycenters.
  static MatrixField sample_cellwise(
      MeshPtr m,
      const std::function<double(int i, int j, const Eigen::VectorXd&)>& f,
      bool symmetric);

  /// Value-wise symmetry check (exact for flagged fields, tolerance for data).
  bool values_symmetric(double rel_tol = 1e-12) const;

  MatrixField& operator+=(const MatrixField& other);
  MatrixField& operator-=(const MatrixField& other);
  MatrixField& operator*=(double s);
};

MatrixField operator+(MatrixField a, const MatrixField& b);
MatrixField operator-(MatrixField a, const MatrixField& b);
MatrixField operator*(double s, MatrixField a);

/// Convert a nodal coefficient field to cellwise storage by barycenter
/// evaluation; cellwise input is returned unchanged.
MatrixField to_cellwise(const MatrixField& f);

} // namespace parid

#endif

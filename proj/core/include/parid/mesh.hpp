#ifndef PARID_MESH_HPP
#define PARID_MESH_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>
#include <vector>

namespace parid {

/// Conforming simplicial mesh of an interval (d=1) or an axis-aligned
/// rectangle split into triangles (d=2), with P1 nodal basis data and
/// the assembled operators every norm and solver needs.
class Mesh {
public:
  int dim = 0;                     // spatial dimension, 1 or 2
  Eigen::MatrixXd nodes;           // node_count x dim coordinates
  Eigen::MatrixXi elements;        // element_count x (dim+1) connectivity
  std::vector<int> boundary_nodes; // sorted indices of nodes on the boundary
  double h = 0.0;                  // max element diameter
  double gamma0 = 0.0;             // min diam / h (quasi-uniformity ratio)

  // Per-element geometry: measure and the constant gradients of the
  // dim+1 vertex hat functions (row e holds grad(phi_v) for each local v,
  // laid out v-major: [g_0x (g_0y) g_1x (g_1y) ...]).
  Eigen::VectorXd elem_measure;
  Eigen::MatrixXd hat_gradients;

  int node_count() const { return static_cast<int>(nodes.rows()); }
  int element_count() const { return static_cast<int>(elements.rows()); }
  double domain_measure() const { return elem_measure.sum(); }

  bool is_boundary(int node) const { return on_boundary_[node] != 0; }
  int interior_count() const { return static_cast<int>(interior_nodes_.size()); }
  const std::vector<int>& interior_nodes() const { return interior_nodes_; }
  /// Interior dof index of a node, or -1 for boundary nodes.
  int interior_index(int node) const { return interior_index_[node]; }

  /// P1 mass matrix (exact integration).
  const Eigen::SparseMatrix<double>& mass() const { return mass_; }
  /// Stiffness matrix for the identity coefficient.
  const Eigen::SparseMatrix<double>& stiffness_identity() const { return stiff1_; }

  /// Discrete H^-1 norm of a nodal field: Riesz dual norm of the L2
  /// functional v -> (psi, v) over the Dirichlet-zero subspace with the
  /// H1 inner product (mass + identity stiffness).
  double dual_norm(const Eigen::VectorXd& psi) const;

  /// Element barycenter.
  Eigen::VectorXd barycenter(int e) const;

  /// Gradient of the P1 interpolant of nodal values on element e.
  Eigen::VectorXd element_gradient(const Eigen::VectorXd& values, int e) const;

  /// Restriction of a symmetric nodal operator to interior dofs.
  Eigen::SparseMatrix<double> restrict_interior(const Eigen::SparseMatrix<double>& full) const;

  /// Gather/scatter between full nodal vectors and interior dof vectors.
  Eigen::VectorXd gather_interior(const Eigen::VectorXd& full) const;
  Eigen::VectorXd scatter_interior(const Eigen::VectorXd& interior) const;

private:
  friend class MeshBuilder;
  std::vector<char> on_boundary_;
  std::vector<int> interior_index_;
  std::vector<int> interior_nodes_;
  Eigen::SparseMatrix<double> mass_;
  Eigen::SparseMatrix<double> stiff1_;
  // Factorization of the interior H1 Gram matrix, for dual_norm.
  std::shared_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> h1_solver_;
};

using MeshPtr = std::shared_ptr<const Mesh>;

/// Uniform partition of [a, b] into `resolution` segments.
/// Throws std::invalid_argument for degenerate domains or resolution < 2.
MeshPtr build_mesh_interval(double a, double b, int resolution);

/// rx-by-ry grid on [ax, bx] x [ay, by], each cell split into two triangles.
MeshPtr build_mesh_rectangle(double ax, double bx, double ay, double by,
                             int rx, int ry);

/// Square convenience: [a, b]^2 with resolution cells per axis.
MeshPtr build_mesh_square(double a, double b, int resolution);

} // namespace parid

#endif

#ifndef PARID_COEFF_BASIS_HPP
#define PARID_COEFF_BASIS_HPP

#include <parid/linearized.hpp>

namespace parid {

/// Coefficient-space basis X_n: L2-normalized indicator functions of the
/// level-l dyadic partition of the domain, and the induced orthonormal
/// matrix basis E^l_ij (one scalar basis function per (i,j) slot).
class CoeffBasis {
public:
  const MeshPtr& mesh() const { return mesh_; }
  int level() const { return level_; }
  /// Number of scalar basis functions (dyadic cells).
  int scalar_count() const { return n_; }
  /// Dimension of the matrix basis, n * d^2.
  int matrix_count() const { return n_ * dsq_; }
  int dim() const { return dim_; }

  int cell_of_element(int e) const { return cell_of_element_[e]; }
  double cell_measure(int cell) const { return cell_measure_[cell]; }
  /// 1/sqrt(|cell|), the L2 normalization of the indicator.
  double cell_scale(int cell) const { return cell_scale_[cell]; }

  /// Flat index of matrix basis element (slot (i,j), cell l).
  int flat_index(int i, int j, int cell) const { return (i * dim_ + j) * n_ + cell; }

  /// The matrix basis element as a cellwise MatrixField.
  MatrixField basis_element(int flat) const;

  /// Entry-wise L2-orthogonal projection onto X_n (cell-wise mean);
  /// idempotent and self-adjoint. Result is cellwise.
  MatrixField project(const MatrixField& c) const;

  /// Coefficients of the projection of c in the orthonormal matrix basis.
  Eigen::VectorXd project_coefficients(const MatrixField& c) const;

  /// Expand a coefficient vector into a cellwise MatrixField.
  MatrixField expand(const Eigen::VectorXd& coeffs) const;

private:
  friend CoeffBasis build_basis(const MeshPtr& mesh, int level);
  MeshPtr mesh_;
  int level_ = 0;
  int dim_ = 0;
  int dsq_ = 0;
  int n_ = 0;
  std::vector<int> cell_of_element_;
  std::vector<double> cell_measure_;
  std::vector<double> cell_scale_;
};

/// Build the level-l dyadic P0 basis. The mesh resolution per axis must be
/// divisible by 2^level so every coefficient cell is a union of elements.
CoeffBasis build_basis(const MeshPtr& mesh, int level);

/// Power-iteration estimate of ||T (I - P_n)|| over the discrete coefficient
/// space, inflated by a fixed safety factor 2 (power iteration lower-bounds
/// the norm; the error splitting needs an upper bound).
double projection_gap(const LinearizedOperator& op, const CoeffBasis& basis,
                      int iterations);

} // namespace parid

#endif

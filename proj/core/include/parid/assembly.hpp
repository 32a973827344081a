#ifndef PARID_ASSEMBLY_HPP
#define PARID_ASSEMBLY_HPP

#include <parid/fields.hpp>

namespace parid {

/// P1 mass matrix, entry (i,j) = int_Omega phi_i phi_j. Symmetric positive
/// definite by construction.
Eigen::SparseMatrix<double> assemble_mass(const Mesh& mesh);

/// Coefficient-weighted stiffness, entry (i,j) = int_Omega coeff grad(phi_j)
/// . grad(phi_i), one-point (barycentric) quadrature per element. Symmetric
/// whenever coeff is symmetric.
Eigen::SparseMatrix<double> assemble_stiffness(const Mesh& mesh, const MatrixField& coeff);

/// Minimum over element barycenters of the smallest eigenvalue of coeff(x).
/// A positive return certifies the discrete uniform ellipticity condition.
/// Throws std::invalid_argument for value-wise asymmetric coefficients.
double check_ellipticity(const MatrixField& coeff);

/// Load vector of the divergence-form source: F_i = -int_Omega C grad(w) . grad(phi_i),
/// i.e. K_C * w with a sign flip.
Eigen::VectorXd div_form_load(const Eigen::SparseMatrix<double>& stiffness_c,
                              const Eigen::VectorXd& w_level);

} // namespace parid

#endif

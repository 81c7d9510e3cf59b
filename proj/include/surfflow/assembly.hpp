#ifndef SURFFLOW_ASSEMBLY_HPP
#define SURFFLOW_ASSEMBLY_HPP

#include "surfflow/constitutive.hpp"
#include "surfflow/linalg.hpp"
#include "surfflow/mesh.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace surfflow {

/// Scalar coefficient sampled at the quadrature points of every triangle.
using QuadScalarField = std::vector<std::array<double, QuadratureRule::num_points>>;
/// Vector coefficient sampled at the quadrature points of every triangle.
using QuadVectorField = std::vector<std::array<Point2, QuadratureRule::num_points>>;

/// Piecewise-constant water flux u_w per triangle.
struct FluxField {
    std::vector<Point2> element_flux;
};

/// P1 interpolation of a nodal vector at the quadrature points.
QuadScalarField interpolate_at_quadrature(const MeshP1& mesh, const Vector& nodal);

/// Sample an analytic coefficient at the quadrature points.
QuadScalarField evaluate_at_quadrature(const MeshP1& mesh,
                                       const std::function<double(double, double)>& f);

QuadScalarField constant_quad_field(const MeshP1& mesh, double value);

/// M_ij = int w phi_i phi_j. Symmetric.
SparseMatrix assemble_weighted_mass(const MeshP1& mesh, const QuadScalarField& weight);

/// A_ij = int k grad(phi_i) . grad(phi_j). Symmetric positive semidefinite
/// for k >= 0; constants lie in the kernel before Dirichlet elimination.
SparseMatrix assemble_weighted_stiffness(const MeshP1& mesh, const QuadScalarField& conductivity);

/// C_ij = int (w phi_j) . grad(phi_i) for a vector coefficient w.
SparseMatrix assemble_flux_gradient_matrix(const MeshP1& mesh, const QuadVectorField& w);

/// Convection matrix C_ij = int (u_w phi_j) . grad(phi_i), conservative form.
SparseMatrix assemble_convection(const MeshP1& mesh, const FluxField& flux);

/// b_i = int k e_z . grad(phi_i), with e_z = (0, 1) the unit vector opposite
/// to gravity.
Vector assemble_gravity_load(const MeshP1& mesh, const QuadScalarField& conductivity);

/// b_i = int f phi_i.
Vector assemble_load(const MeshP1& mesh, const QuadScalarField& f);

/// Darcy flux per triangle: u_w = -K(theta(psi_bar, c_bar)) (grad psi_h + e_z)
/// with element-averaged (psi_bar, c_bar) and saturated = (psi_bar > 0).
FluxField compute_water_flux(const MeshP1& mesh, const Vector& psi, const Vector& c,
                             const VanGenuchtenParams& params);

/// Dirichlet values keyed by unknown index. For single-field systems the
/// unknown index is the node index; stacked systems use field-offset indices.
struct DirichletValues {
    std::vector<std::pair<int, double>> entries;
};

/// Linear system after Dirichlet elimination. dof_of_unknown maps every
/// unknown to its row in the reduced system, -1 for eliminated unknowns.
struct SparseSystem {
    SparseMatrix matrix;
    Vector rhs;
    std::vector<int> dof_of_unknown;
    std::vector<int> unknown_of_dof;

    int num_free() const { return static_cast<int>(unknown_of_dof.size()); }
    Vector restrict_to_free(const Vector& full) const;
    /// Scatter a reduced solution back to full size, re-inserting the
    /// eliminated values exactly.
    Vector reconstruct(const Vector& reduced, const DirichletValues& values) const;
};

/// Eliminates the rows/columns listed in `values` from A x = b, moving their
/// contributions to the right-hand side.
SparseSystem eliminate_unknowns(const SparseMatrix& a, const Vector& b,
                                const DirichletValues& values);

/// Node-tag-driven elimination for single-field systems: every
/// dirichlet-tagged node must carry a value and only tagged nodes may.
SparseSystem apply_dirichlet(const SparseMatrix& a, const Vector& b, const MeshP1& mesh,
                             const DirichletValues& values);

} // namespace surfflow

#endif

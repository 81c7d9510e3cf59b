#include "surfflow/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surfflow {

namespace {

void check_field_size(const MeshP1& mesh, size_t n, const char* who) {
    if (n != static_cast<size_t>(mesh.num_triangles()))
        throw std::invalid_argument(std::string(who) + ": quadrature field size mismatch");
}

} // namespace

QuadScalarField interpolate_at_quadrature(const MeshP1& mesh, const Vector& nodal) {
    if (nodal.size() != mesh.num_nodes())
        throw std::invalid_argument("interpolate_at_quadrature: nodal size mismatch");
    QuadScalarField out(mesh.num_triangles());
    const auto& quad = mesh.quadrature();
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const auto& l = quad.barycentric[q];
            out[t][q] = l[0] * nodal[tri[0]] + l[1] * nodal[tri[1]] + l[2] * nodal[tri[2]];
        }
    }
    return out;
}

QuadScalarField evaluate_at_quadrature(const MeshP1& mesh,
                                       const std::function<double(double, double)>& f) {
    QuadScalarField out(mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t)
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const Point2& x = mesh.quad_point(t, q);
            out[t][q] = f(x.x(), x.y());
        }
    return out;
}

QuadScalarField constant_quad_field(const MeshP1& mesh, double value) {
    QuadScalarField out(mesh.num_triangles());
    for (auto& e : out) e.fill(value);
    return out;
}

SparseMatrix assemble_weighted_mass(const MeshP1& mesh, const QuadScalarField& weight) {
    check_field_size(mesh, weight.size(), "assemble_weighted_mass");
    const auto& quad = mesh.quadrature();
    std::vector<Triplet> trip;
    trip.reserve(9u * mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const double area = mesh.element_data(t).area;
        double local[3][3] = {};
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const auto& l = quad.barycentric[q];
            const double s = quad.weights[q] * area * weight[t][q];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) local[i][j] += s * l[i] * l[j];
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) trip.push_back({tri[i], tri[j], local[i][j]});
    }
    return SparseMatrix::from_triplets(mesh.num_nodes(), trip);
}

SparseMatrix assemble_weighted_stiffness(const MeshP1& mesh, const QuadScalarField& conductivity) {
    check_field_size(mesh, conductivity.size(), "assemble_weighted_stiffness");
    const auto& quad = mesh.quadrature();
    std::vector<Triplet> trip;
    trip.reserve(9u * mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const auto& d = mesh.element_data(t);
        double kbar = 0.0;
        for (int q = 0; q < QuadratureRule::num_points; ++q)
            kbar += quad.weights[q] * conductivity[t][q];
        const double s = kbar * d.area;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trip.push_back({tri[i], tri[j], s * d.grad[i].dot(d.grad[j])});
    }
    return SparseMatrix::from_triplets(mesh.num_nodes(), trip);
}

SparseMatrix assemble_flux_gradient_matrix(const MeshP1& mesh, const QuadVectorField& w) {
    check_field_size(mesh, w.size(), "assemble_flux_gradient_matrix");
    const auto& quad = mesh.quadrature();
    std::vector<Triplet> trip;
    trip.reserve(9u * mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const auto& d = mesh.element_data(t);
        double local[3][3] = {};
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const auto& l = quad.barycentric[q];
            const double s = quad.weights[q] * d.area;
            for (int i = 0; i < 3; ++i) {
                const double wi = s * w[t][q].dot(d.grad[i]);
                for (int j = 0; j < 3; ++j) local[i][j] += wi * l[j];
            }
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) trip.push_back({tri[i], tri[j], local[i][j]});
    }
    return SparseMatrix::from_triplets(mesh.num_nodes(), trip);
}

SparseMatrix assemble_convection(const MeshP1& mesh, const FluxField& flux) {
    check_field_size(mesh, flux.element_flux.size(), "assemble_convection");
    QuadVectorField w(mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        if (!flux.element_flux[t].allFinite())
            throw std::invalid_argument("assemble_convection: non-finite flux entry");
        w[t].fill(flux.element_flux[t]);
    }
    return assemble_flux_gradient_matrix(mesh, w);
}

Vector assemble_gravity_load(const MeshP1& mesh, const QuadScalarField& conductivity) {
    check_field_size(mesh, conductivity.size(), "assemble_gravity_load");
    const auto& quad = mesh.quadrature();
    Vector out = Vector::Zero(mesh.num_nodes());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const auto& d = mesh.element_data(t);
        double kbar = 0.0;
        for (int q = 0; q < QuadratureRule::num_points; ++q)
            kbar += quad.weights[q] * conductivity[t][q];
        for (int i = 0; i < 3; ++i) out[tri[i]] += kbar * d.area * d.grad[i].y();
    }
    return out;
}

Vector assemble_load(const MeshP1& mesh, const QuadScalarField& f) {
    check_field_size(mesh, f.size(), "assemble_load");
    const auto& quad = mesh.quadrature();
    Vector out = Vector::Zero(mesh.num_nodes());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const double area = mesh.element_data(t).area;
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const auto& l = quad.barycentric[q];
            const double s = quad.weights[q] * area * f[t][q];
            for (int i = 0; i < 3; ++i) out[tri[i]] += s * l[i];
        }
    }
    return out;
}

FluxField compute_water_flux(const MeshP1& mesh, const Vector& psi, const Vector& c,
                             const VanGenuchtenParams& params) {
    if (psi.size() != mesh.num_nodes() || c.size() != mesh.num_nodes())
        throw std::invalid_argument("compute_water_flux: field size mismatch");
    FluxField out;
    out.element_flux.resize(mesh.num_triangles());
    const Point2 e_z(0.0, 1.0);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangle(t);
        const auto& d = mesh.element_data(t);
        const double psi_bar = (psi[tri[0]] + psi[tri[1]] + psi[tri[2]]) / 3.0;
        const double c_bar = (c[tri[0]] + c[tri[1]] + c[tri[2]]) / 3.0;
        const double theta = water_content(psi_bar, c_bar, params);
        const double K = hydraulic_conductivity(theta, params, psi_bar > 0.0);
        Point2 grad_psi = Point2::Zero();
        for (int i = 0; i < 3; ++i) grad_psi += psi[tri[i]] * d.grad[i];
        out.element_flux[t] = -K * (grad_psi + e_z);
    }
    return out;
}

Vector SparseSystem::restrict_to_free(const Vector& full) const {
    Vector out(num_free());
    for (int d = 0; d < num_free(); ++d) out[d] = full[unknown_of_dof[d]];
    return out;
}

Vector SparseSystem::reconstruct(const Vector& reduced, const DirichletValues& values) const {
    if (reduced.size() != num_free())
        throw std::invalid_argument("SparseSystem::reconstruct: size mismatch");
    Vector full = Vector::Zero(dof_of_unknown.size());
    for (int d = 0; d < num_free(); ++d) full[unknown_of_dof[d]] = reduced[d];
    for (const auto& [idx, value] : values.entries) full[idx] = value;
    return full;
}

SparseSystem eliminate_unknowns(const SparseMatrix& a, const Vector& b,
                                const DirichletValues& values) {
    const int n = a.size();
    if (b.size() != n) throw std::invalid_argument("eliminate_unknowns: rhs size mismatch");

    std::vector<double> constrained_value(n, 0.0);
    std::vector<char> constrained(n, 0);
    for (const auto& [idx, value] : values.entries) {
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("eliminate_unknowns: constraint index out of range");
        constrained[idx] = 1;
        constrained_value[idx] = value;
    }

    SparseSystem sys;
    sys.dof_of_unknown.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (constrained[i]) continue;
        sys.dof_of_unknown[i] = static_cast<int>(sys.unknown_of_dof.size());
        sys.unknown_of_dof.push_back(i);
    }

    const auto offsets = a.row_offsets();
    const auto cols = a.col_indices();
    const auto vals = a.values();

    sys.rhs = Vector(sys.num_free());
    std::vector<Triplet> trip;
    trip.reserve(vals.size());
    for (int i = 0; i < n; ++i) {
        const int row = sys.dof_of_unknown[i];
        if (row < 0) continue;
        double rhs_i = b[i];
        for (int k = offsets[i]; k < offsets[i + 1]; ++k) {
            const int j = cols[k];
            if (constrained[j])
                rhs_i -= vals[k] * constrained_value[j];
            else
                trip.push_back({row, sys.dof_of_unknown[j], vals[k]});
        }
        sys.rhs[row] = rhs_i;
    }
    sys.matrix = SparseMatrix::from_triplets(sys.num_free(), trip);
    return sys;
}

SparseSystem apply_dirichlet(const SparseMatrix& a, const Vector& b, const MeshP1& mesh,
                             const DirichletValues& values) {
    if (a.size() != mesh.num_nodes())
        throw std::invalid_argument("apply_dirichlet: matrix is not node-indexed");
    std::vector<char> has_value(mesh.num_nodes(), 0);
    for (const auto& [node, value] : values.entries) {
        (void)value;
        if (node < 0 || node >= mesh.num_nodes())
            throw std::invalid_argument("apply_dirichlet: node out of range");
        if (mesh.tag(node) != BoundaryTag::dirichlet)
            throw std::invalid_argument("apply_dirichlet: value specified for non-dirichlet node " +
                                        std::to_string(node));
        has_value[node] = 1;
    }
    for (int i = 0; i < mesh.num_nodes(); ++i)
        if (mesh.tag(i) == BoundaryTag::dirichlet && !has_value[i])
            throw std::invalid_argument("apply_dirichlet: missing value for dirichlet node " +
                                        std::to_string(i));
    return eliminate_unknowns(a, b, values);
}

} // namespace surfflow

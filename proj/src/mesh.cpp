#include "surfflow/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace surfflow {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

bool MeshP1::on_boundary(int i) const {
    const Point2& p = nodes_[i];
    return p.x() < kBoundaryTol || p.x() > 1.0 - kBoundaryTol || p.y() < kBoundaryTol ||
           p.y() > 1.0 - kBoundaryTol;
}

void MeshP1::finalize() {
    element_data_.resize(triangles_.size());
    quad_points_.resize(triangles_.size());
    for (int t = 0; t < num_triangles(); ++t) {
        const auto& tri = triangles_[t];
        const Point2& a = nodes_[tri[0]];
        const Point2& b = nodes_[tri[1]];
        const Point2& c = nodes_[tri[2]];
        const double det = (b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y());
        if (det <= 0.0)
            throw std::invalid_argument("MeshP1: degenerate or negatively oriented triangle");
        P1ElementData& d = element_data_[t];
        d.area = 0.5 * det;
        // grad of barycentric function i is the inward normal of the opposite
        // edge scaled by 1/(2 area)
        d.grad[0] = Point2(b.y() - c.y(), c.x() - b.x()) / det;
        d.grad[1] = Point2(c.y() - a.y(), a.x() - c.x()) / det;
        d.grad[2] = Point2(a.y() - b.y(), b.x() - a.x()) / det;
        for (int q = 0; q < QuadratureRule::num_points; ++q) {
            const auto& l = quad_.barycentric[q];
            quad_points_[t][q] = l[0] * a + l[1] * b + l[2] * c;
        }
    }
}

MeshP1 build_unit_square_mesh(int m) {
    if (m < 2) throw std::invalid_argument("build_unit_square_mesh: need m >= 2");

    MeshP1 mesh;
    mesh.m_ = m;
    mesh.h_ = std::sqrt(2.0) / m;
    const int nside = m + 1;
    mesh.nodes_.reserve(static_cast<size_t>(nside) * nside);
    for (int j = 0; j < nside; ++j)
        for (int i = 0; i < nside; ++i)
            mesh.nodes_.emplace_back(static_cast<double>(i) / m, static_cast<double>(j) / m);

    auto idx = [nside](int i, int j) { return j * nside + i; };
    mesh.triangles_.reserve(2u * m * m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const int bl = idx(i, j), br = idx(i + 1, j);
            const int tr = idx(i + 1, j + 1), tl = idx(i, j + 1);
            mesh.triangles_.push_back({bl, br, tr});
            mesh.triangles_.push_back({bl, tr, tl});
        }
    }

    mesh.tags_.resize(mesh.nodes_.size(), BoundaryTag::interior);
    for (int i = 0; i < mesh.num_nodes(); ++i)
        if (mesh.on_boundary(i)) mesh.tags_[i] = BoundaryTag::neumann;

    mesh.finalize();
    return mesh;
}

MeshP1 classify_boundary(const MeshP1& mesh,
                         const std::function<bool(double, double)>& dirichlet_region) {
    MeshP1 out = mesh;
    for (int i = 0; i < out.num_nodes(); ++i) {
        if (!out.on_boundary(i)) continue;
        const Point2& p = out.nodes_[i];
        out.tags_[i] =
            dirichlet_region(p.x(), p.y()) ? BoundaryTag::dirichlet : BoundaryTag::neumann;
    }
    return out;
}

MeshP1 tag_node_dirichlet(const MeshP1& mesh, int node) {
    if (node < 0 || node >= mesh.num_nodes())
        throw std::invalid_argument("tag_node_dirichlet: node out of range");
    MeshP1 out = mesh;
    out.tags_[node] = BoundaryTag::dirichlet;
    return out;
}

P1ElementData p1_element_data(const MeshP1& mesh, int t) {
    if (t < 0 || t >= mesh.num_triangles())
        throw std::invalid_argument("p1_element_data: triangle index out of range");
    return mesh.element_data(t);
}

int nearest_node(const MeshP1& mesh, double x, double y) {
    int best = 0;
    double best_d = std::numeric_limits<double>::max();
    const Point2 p(x, y);
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        const double d = (mesh.node(i) - p).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

} // namespace surfflow

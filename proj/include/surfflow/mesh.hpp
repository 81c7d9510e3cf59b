#ifndef SURFFLOW_MESH_HPP
#define SURFFLOW_MESH_HPP

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <vector>

namespace surfflow {

using Point2 = Eigen::Vector2d;

enum class BoundaryTag { interior, dirichlet, neumann };

/// Quadrature on the reference triangle in barycentric coordinates.
/// The default rule is the 3-point edge-midpoint rule, exact for
/// polynomials of total degree <= 2.
struct QuadratureRule {
    static constexpr int num_points = 3;
    std::array<std::array<double, 3>, num_points> barycentric{{
        {0.5, 0.5, 0.0},
        {0.0, 0.5, 0.5},
        {0.5, 0.0, 0.5},
    }};
    std::array<double, num_points> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    int exact_degree = 2;
};

/// Per-element P1 data: area and the (constant) gradients of the three
/// nodal basis functions. Gradients sum to zero.
struct P1ElementData {
    double area = 0.0;
    std::array<Point2, 3> grad{};
};

/// Structured triangulation of the unit square with P1 nodal basis.
/// Immutable after construction; safe to share read-only across workers.
class MeshP1 {
public:
    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    double mesh_size() const { return h_; }
    int cells_per_side() const { return m_; }

    const Point2& node(int i) const { return nodes_[i]; }
    const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
    BoundaryTag tag(int i) const { return tags_[i]; }
    const std::vector<BoundaryTag>& tags() const { return tags_; }

    const P1ElementData& element_data(int t) const { return element_data_[t]; }
    const QuadratureRule& quadrature() const { return quad_; }
    /// Physical coordinates of quadrature point q of triangle t.
    const Point2& quad_point(int t, int q) const { return quad_points_[t][q]; }

    bool on_boundary(int i) const;

    friend MeshP1 build_unit_square_mesh(int m);
    friend MeshP1 classify_boundary(const MeshP1& mesh,
                                    const std::function<bool(double, double)>& dirichlet_region);
    friend MeshP1 tag_node_dirichlet(const MeshP1& mesh, int node);

private:
    void finalize();

    int m_ = 0;
    double h_ = 0.0;
    std::vector<Point2> nodes_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<BoundaryTag> tags_;
    std::vector<P1ElementData> element_data_;
    std::vector<std::array<Point2, QuadratureRule::num_points>> quad_points_;
    QuadratureRule quad_;
};

/// Uniform triangulation with m cells per side, each square split along the
/// bottom-left-to-top-right diagonal. (m+1)^2 nodes, 2 m^2 triangles,
/// h = sqrt(2)/m. All boundary nodes start tagged neumann.
MeshP1 build_unit_square_mesh(int m);

/// Returns a copy with boundary nodes inside the given region re-tagged
/// dirichlet; remaining boundary nodes stay neumann.
MeshP1 classify_boundary(const MeshP1& mesh,
                         const std::function<bool(double, double)>& dirichlet_region);

/// Returns a copy with one node (boundary or interior) tagged dirichlet;
/// used for nodal well constraints.
MeshP1 tag_node_dirichlet(const MeshP1& mesh, int node);

/// Area and basis gradients of one triangle. Throws on degenerate elements.
P1ElementData p1_element_data(const MeshP1& mesh, int t);

/// Index of the mesh node closest to (x, y).
int nearest_node(const MeshP1& mesh, double x, double y);

} // namespace surfflow

#endif

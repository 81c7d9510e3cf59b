#ifndef SURFFLOW_PROBLEMS_HPP
#define SURFFLOW_PROBLEMS_HPP

#include "surfflow/assembly.hpp"
#include "surfflow/constitutive.hpp"
#include "surfflow/mesh.hpp"

#include <optional>
#include <string>

namespace surfflow {

/// Nodal well: fixed pressure head and concentration imposed at the mesh
/// node nearest to (x, y).
struct WellSpec {
    double x = 0.5;
    double y = 0.625;
    double p_w = -10.0;
    double c_w = 10.0;

    bool operator==(const WellSpec&) const = default;
};

/// Declarative benchmark definition on the unit square: two horizontal
/// subdomains split at interface_y, Dirichlet data on the top edge,
/// no-flow Neumann elsewhere, and a cosine-sine source in the upper part.
struct ProblemSpec {
    std::string name = "1a";
    VanGenuchtenParams params{};
    double T_final = 1.0;
    double interface_y = 0.25;

    double psi0_up = -2.0;
    /// psi0 in the lower subdomain is psi0_down_slope * y + psi0_down_offset.
    double psi0_down_slope = -1.0;
    double psi0_down_offset = -0.25;
    double c0 = 1.0;

    double psi_top = -3.0;
    double c_top = 4.0;

    double source_amplitude = 0.006;

    bool reaction_enabled = false;
    ReactionLinearization reaction_linearization = ReactionLinearization::semi_implicit;

    std::optional<WellSpec> well;

    double initial_psi(double x, double y) const;
    double initial_c(double x, double y) const;
    /// Source term applied identically to the flow and transport equations;
    /// supported on the upper subdomain (y >= interface_y).
    double source(double x, double y) const;
    bool dirichlet_region(double x, double y) const;

    /// Tags the top edge dirichlet and, when a well is present, the nearest
    /// node to the well position. Throws when the well lies outside the mesh.
    MeshP1 tagged_mesh(const MeshP1& base) const;
    /// Node index of the well constraint on the given mesh, if any.
    std::optional<int> well_node(const MeshP1& mesh) const;

    /// Dirichlet values for the pressure and concentration fields on a
    /// tagged mesh (top edge plus well node).
    DirichletValues psi_dirichlet(const MeshP1& tagged) const;
    DirichletValues c_dirichlet(const MeshP1& tagged) const;

    void validate() const;
};

/// Example 1A: strictly unsaturated flow and transport.
ProblemSpec example_1a();
/// Example 1B: variably saturated (degenerate) variant of 1A with reaction.
ProblemSpec example_1b();
/// Example 2A: 1A plus a well imposing psi = -10, c = 10.
ProblemSpec example_2a();
/// Example 2B: 2A with the variably saturated initial pressure of 1B.
ProblemSpec example_2b();

/// Problem by selector "1a", "1b", "2a", "2b".
ProblemSpec named_problem(const std::string& name);

/// Flat key=value serialization; round-trips losslessly through
/// parse_problem.
std::string serialize_problem(const ProblemSpec& p);
ProblemSpec parse_problem(const std::string& text);

} // namespace surfflow

#endif

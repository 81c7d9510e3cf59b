#ifndef SURFFLOW_CONSTITUTIVE_HPP
#define SURFFLOW_CONSTITUTIVE_HPP

namespace surfflow {

/// Soil and fluid constants of the van Genuchten-Mualem laws plus the
/// surfactant scaling and diffusion. zeta and sigma0 are surface-tension
/// metadata carried along with the data set; no constitutive law uses them.
struct VanGenuchtenParams {
    double theta_r = 0.0026; ///< residual water content
    double theta_s = 0.42;   ///< saturated water content
    double n = 2.9;          ///< shape exponent, n > 1
    double alpha = 0.95;     ///< inverse capillary length
    double K_s = 0.12;       ///< saturated conductivity
    double a = 0.044;        ///< surface-tension parameter (concentration scale)
    double b = 0.4745;       ///< surface-tension parameter (dimensionless)
    double D = 6.0e-4;       ///< diffusion coefficient
    double zeta = 2.4901;    ///< stored, unused
    double sigma0 = 73.0;    ///< stored, unused (mN/m)

    /// Throws std::invalid_argument when the parameter invariants fail.
    void validate() const;

    static VanGenuchtenParams table1() { return {}; }
};

/// Surfactant scaling factor gamma(c)/gamma0 = 1 / (1 - b log10(c/a + 1)).
///
/// The base-10 logarithm is the reading under which the benchmark data sets
/// (c up to 4 with a = .044, b = .4745) stay inside the model's validity
/// domain; natural log would make the denominator negative already at c = 1.
/// Throws std::domain_error for c < 0 and when the denominator is <= 0.
double scaling_factor(double c, const VanGenuchtenParams& p);

/// Water content theta(psi, c). Branches on the sign of psi: the saturated
/// branch returns theta_s, the unsaturated branch evaluates the van
/// Genuchten curve at the scaled pressure head. Result lies in
/// [theta_r, theta_s] and is continuous at psi = 0.
double water_content(double psi, double c, const VanGenuchtenParams& p);

/// Hydraulic conductivity K(theta) of the Mualem form
/// K_s theta^(1/2) [1 - (1 - theta^(n/(n-1)))^((n-1)/n)].
/// Callers pass saturated = (psi > 0); the saturated branch returns K_s.
/// Throws std::domain_error for theta outside [0, 1].
double hydraulic_conductivity(double theta, const VanGenuchtenParams& p, bool saturated);

/// Analytic partial derivatives of water_content and the K(theta) curve.
/// At psi = 0 the one-sided unsaturated limit is used (it vanishes for n > 2).
double d_theta_d_psi(double psi, double c, const VanGenuchtenParams& p);
double d_theta_d_c(double psi, double c, const VanGenuchtenParams& p);
double d_K_d_theta(double theta, const VanGenuchtenParams& p);

/// Reaction term R(c) = c / (1 + c).
double reaction(double c);

enum class ReactionLinearization {
    /// R(c^{j+1}) ~ c^{j+1} / (1 + c^j): affine in the unknown, recovers R
    /// at convergence.
    semi_implicit,
    /// The variant printed as R(c^{j+1}) -> (1 + c^{j+1}) / c^j, kept for
    /// comparison runs.
    printed,
};

/// Affine-in-the-unknown contribution slope * c_next + offset.
struct ReactionAffine {
    double slope = 0.0;
    double offset = 0.0;

    double at(double c_next) const { return slope * c_next + offset; }
};

/// Linearization of the reaction term around the previous iterate.
ReactionAffine reaction_linearized(double c_prev_iter, ReactionLinearization kind);

/// One-stop evaluation of the constitutive state at a point; computes the
/// scaling factor once and shares it across the laws and derivatives.
struct ConstitutiveState {
    double theta;
    double K;
    double dtheta_dpsi;
    double dtheta_dc;
    double dK_dtheta;
    bool saturated;
};

ConstitutiveState evaluate_state(double psi, double c, const VanGenuchtenParams& p);

} // namespace surfflow

#endif

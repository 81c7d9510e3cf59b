#include "surfflow/constitutive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace surfflow {

namespace {

constexpr double kLn10 = 2.302585092994045684;
// Beyond this scaled suction the retention curve is numerically flat at
// theta_r; evaluating the powers would overflow before losing anything.
constexpr double kSuctionCutoff = 1e30;

double log10p(double x) { return std::log(x) / kLn10; }

struct Scaling {
    double gamma;  // 1 / (1 - b log10(c/a + 1))
    double dgamma; // d gamma / d c
};

Scaling scaling_with_derivative(double c, const VanGenuchtenParams& p) {
    if (c < 0.0) throw std::domain_error("scaling_factor: negative concentration c=" + std::to_string(c));
    const double den = 1.0 - p.b * log10p(c / p.a + 1.0);
    if (den <= 0.0)
        throw std::domain_error("scaling_factor: concentration c=" + std::to_string(c) +
                                " beyond model validity (1 - b log10(c/a+1) <= 0)");
    const double gamma = 1.0 / den;
    const double dgamma = p.b / (kLn10 * (c + p.a)) * gamma * gamma;
    return {gamma, dgamma};
}

// Retention curve pieces at the scaled head psi_eff = gamma * psi <= 0:
//   u = (-alpha psi_eff)^n,  S = (1 + u)^(-m),  theta = theta_r + (theta_s - theta_r) S.
struct Retention {
    double S;
    double dS_dpsie; // derivative w.r.t. psi_eff
};

Retention retention(double psi_eff, const VanGenuchtenParams& p) {
    const double s = -p.alpha * psi_eff; // >= 0
    if (s > kSuctionCutoff) return {0.0, 0.0};
    const double m = (p.n - 1.0) / p.n;
    const double u = std::pow(s, p.n);
    const double S = std::pow(1.0 + u, -m);
    const double dS = m * p.n * p.alpha * std::pow(s, p.n - 1.0) * std::pow(1.0 + u, -m - 1.0);
    return {S, dS};
}

} // namespace

void VanGenuchtenParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("VanGenuchtenParams: " + msg); };
    if (!(0.0 <= theta_r && theta_r < theta_s && theta_s <= 1.0))
        fail("need 0 <= theta_r < theta_s <= 1");
    if (!(n > 1.0)) fail("need n > 1");
    if (!(alpha > 0.0)) fail("need alpha > 0");
    if (!(K_s > 0.0)) fail("need K_s > 0");
    if (!(a > 0.0)) fail("need a > 0");
    if (!(b >= 0.0)) fail("need b >= 0");
    if (!(D > 0.0)) fail("need D > 0");
}

double scaling_factor(double c, const VanGenuchtenParams& p) {
    return scaling_with_derivative(c, p).gamma;
}

double water_content(double psi, double c, const VanGenuchtenParams& p) {
    if (psi > 0.0) return p.theta_s;
    const double gamma = scaling_with_derivative(c, p).gamma;
    const Retention r = retention(gamma * psi, p);
    return p.theta_r + (p.theta_s - p.theta_r) * r.S;
}

double hydraulic_conductivity(double theta, const VanGenuchtenParams& p, bool saturated) {
    if (saturated) return p.K_s;
    if (theta < 0.0 || theta > 1.0)
        throw std::domain_error("hydraulic_conductivity: theta=" + std::to_string(theta) +
                                " outside [0, 1]");
    if (theta == 0.0) return 0.0;
    const double m = (p.n - 1.0) / p.n;
    const double q = p.n / (p.n - 1.0);
    const double bracket = 1.0 - std::pow(1.0 - std::pow(theta, q), m);
    return p.K_s * std::sqrt(theta) * bracket;
}

double d_theta_d_psi(double psi, double c, const VanGenuchtenParams& p) {
    if (psi > 0.0) return 0.0;
    const Scaling sc = scaling_with_derivative(c, p);
    const Retention r = retention(sc.gamma * psi, p);
    return (p.theta_s - p.theta_r) * r.dS_dpsie * sc.gamma;
}

double d_theta_d_c(double psi, double c, const VanGenuchtenParams& p) {
    if (psi > 0.0) return 0.0;
    const Scaling sc = scaling_with_derivative(c, p);
    const Retention r = retention(sc.gamma * psi, p);
    return (p.theta_s - p.theta_r) * r.dS_dpsie * psi * sc.dgamma;
}

double d_K_d_theta(double theta, const VanGenuchtenParams& p) {
    if (theta <= 0.0 || theta >= 1.0)
        throw std::domain_error("d_K_d_theta: theta=" + std::to_string(theta) +
                                " outside (0, 1)");
    const double m = (p.n - 1.0) / p.n;
    const double q = p.n / (p.n - 1.0);
    const double tq = std::pow(theta, q);
    const double bracket = 1.0 - std::pow(1.0 - tq, m);
    return p.K_s * (bracket / (2.0 * std::sqrt(theta)) +
                    std::sqrt(theta) * std::pow(theta, q - 1.0) * std::pow(1.0 - tq, m - 1.0));
}

double reaction(double c) {
    if (c == -1.0) throw std::domain_error("reaction: division by zero at c = -1");
    return c / (1.0 + c);
}

ReactionAffine reaction_linearized(double c_prev_iter, ReactionLinearization kind) {
    switch (kind) {
    case ReactionLinearization::semi_implicit: {
        const double den = 1.0 + c_prev_iter;
        if (den == 0.0)
            throw std::domain_error("reaction_linearized: previous iterate at c = -1");
        return {1.0 / den, 0.0};
    }
    case ReactionLinearization::printed: {
        if (c_prev_iter == 0.0)
            throw std::domain_error("reaction_linearized: printed variant needs c_prev != 0");
        return {1.0 / c_prev_iter, 1.0 / c_prev_iter};
    }
    }
    throw std::logic_error("reaction_linearized: unknown kind");
}

ConstitutiveState evaluate_state(double psi, double c, const VanGenuchtenParams& p) {
    ConstitutiveState s{};
    s.saturated = psi > 0.0;
    if (s.saturated) {
        // The scaling factor must still be defined at c; evaluate it so
        // out-of-domain concentrations are rejected on both branches.
        (void)scaling_with_derivative(c, p);
        s.theta = p.theta_s;
        s.K = p.K_s;
        s.dtheta_dpsi = 0.0;
        s.dtheta_dc = 0.0;
        s.dK_dtheta = 0.0;
        return s;
    }
    const Scaling sc = scaling_with_derivative(c, p);
    const Retention r = retention(sc.gamma * psi, p);
    const double span = p.theta_s - p.theta_r;
    s.theta = p.theta_r + span * r.S;
    s.dtheta_dpsi = span * r.dS_dpsie * sc.gamma;
    s.dtheta_dc = span * r.dS_dpsie * psi * sc.dgamma;
    s.K = hydraulic_conductivity(s.theta, p, false);
    s.dK_dtheta = s.theta > 0.0 && s.theta < 1.0 ? d_K_d_theta(s.theta, p) : 0.0;
    return s;
}

} // namespace surfflow

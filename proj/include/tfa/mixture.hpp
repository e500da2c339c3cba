#ifndef TFA_MIXTURE_HPP
#define TFA_MIXTURE_HPP

#include "tfa/eos.hpp"

#include <utility>

namespace tfa {

/// Two fluids plus a volume fraction. Mean quantities are volume- or
/// mass-weighted as appropriate; eta denotes the signed mass-fraction
/// variable eta^+ - eta^-.
struct MixtureState {
    FluidCoeffs plus;
    FluidCoeffs minus;
    double alpha_plus = 0.5;

    double alpha_minus() const { return 1.0 - alpha_plus; }
    double rho() const {
        return alpha_plus * plus.rho + alpha_minus() * minus.rho;
    }
    double eta_plus() const { return alpha_plus * plus.rho / rho(); }
    double eta_minus() const { return alpha_minus() * minus.rho / rho(); }
    double eta() const { return eta_plus() - eta_minus(); }
    /// Volume-averaged dynamic viscosity.
    double mu_mean() const {
        return alpha_plus * plus.mu + alpha_minus() * minus.mu;
    }
};

MixtureState make_mixture(const FluidSetup& plus, const FluidSetup& minus,
                          double p, double T, double alpha_plus);

/// Water-air mixture at the default state.
MixtureState default_mixture(double alpha_plus);

/// Wood speed from mean density and mean compressibility:
/// 1/(rho c_w^2) = alpha^-/(rho^- c^-^2) + alpha^+/(rho^+ c^+^2).
double wood_speed(const MixtureState& mix);

/// Mass-fraction form of the same relation,
/// 1/(rho^2 c_w^2) = eta^-/(rho^- c^-)^2 + eta^+/(rho^+ c^+)^2;
/// equal to wood_speed to round-off, kept as an algebraic cross-check.
double wood_speed_mass_form(const MixtureState& mix);

/// Wood speed with the non-conductive (isothermal) sound speed c_T in
/// the gas term. Phase "-" is the gas.
double wood_speed_isothermal_gas(const MixtureState& mix);

struct WoodMinimum {
    double alpha_min;         ///< golden-section minimizer of c_w over [0,1]
    double c_min;             ///< minimal Wood speed
    double alpha_min_printed; ///< closed-form minimizer, advisory cross-check
};

/// Minimum of alpha -> wood_speed over [0,1]. The golden-section result
/// is authoritative; the closed-form minimizer is reported alongside.
WoodMinimum wood_minimum(const FluidCoeffs& plus, const FluidCoeffs& minus);

/// Small-density-ratio approximations of the Wood minimum,
/// c_min ~ 2 c_l sqrt(rho_l/rho_h) at alpha_l ~ 1/2, where l is the
/// light phase (relabelled internally if needed).
WoodMinimum wood_minimum_light_phase_approx(const FluidCoeffs& plus,
                                            const FluidCoeffs& minus);

/// Effective phase speeds for a stratified regime (confinement of each
/// phase by the other). Requires 0 < alpha^+ < 1.
std::pair<double, double> nguyen_stratified(const MixtureState& mix);

/// Slug-regime composite speed, harmonic volume average of c^+/c^-.
double nguyen_slug(const MixtureState& mix);

/// Effective speeds of a homogeneous bubbly regime.
std::pair<double, double> nguyen_bubbly_effective(const MixtureState& mix);

/// Bubbly composite speed built from the effective speeds, assuming the
/// wave passes through each phase successively.
double nguyen_bubbly(const MixtureState& mix);

/// Wood-type mean compressibility evaluated with the bubbly effective
/// speeds; algebraically identical to wood_speed (the confinement
/// factors cancel). Asserts the identity to relative 1e-12.
double wood_from_effective(const MixtureState& mix);

struct EquilibriumSpeeds {
    double c_T_eq; ///< non-conductive equilibrium speed (Wood with c_T)
    double c_eq;   ///< relaxed (isentropic) equilibrium speed
};

/// Speeds of sound of the mixture in full thermodynamic equilibrium
/// (common p and T). Also evaluates the equivalent ratio form of c_eq
/// and throws InvalidStateError if the two disagree beyond 1e-10
/// relative (which indicates inputs not actually in equilibrium).
EquilibriumSpeeds equilibrium_speed(const MixtureState& mix);

/// Pressure of the frozen-entropy mixture EoS p = P(rho, eta; s+, s-):
/// mechanical equilibrium between the phases, each on its own isentrope.
/// Solved by safeguarded Newton on the specific volume.
double mixture_pressure_frozen(const EosSpec& plus, double s_plus,
                               const EosSpec& minus, double s_minus,
                               double rho, double eta);

struct EquilibriumPoint {
    double p;
    double T;
};

/// State (p, T) of the one-temperature mixture EoS p = P(rho, eta, s):
/// mechanical plus thermal equilibrium. 2x2 Newton with the analytic
/// Jacobian from the phasic coefficients.
EquilibriumPoint mixture_equilibrium_state(const EosSpec& plus,
                                           const EosSpec& minus, double rho,
                                           double eta, double s,
                                           EquilibriumPoint guess);

} // namespace tfa

#endif

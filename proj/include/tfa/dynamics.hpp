#ifndef TFA_DYNAMICS_HPP
#define TFA_DYNAMICS_HPP

#include "tfa/mixture.hpp"
#include "tfa/polyroot.hpp"
#include "tfa/smallmat.hpp"

#include <string>
#include <vector>

namespace tfa {

/// Identifies which model generated a linear system or dispersion
/// polynomial.
enum class ModelTag {
    NavierStokes,          ///< single viscous heat-conducting fluid
    OneVelocityIsentropic, ///< 3x3, pressure speed c_w
    OneVelocityTwoTemp,    ///< 5x5, pressure speed c_w
    OneVelocityEquilibrium,///< 4x4, pressure speed c_eq
    TwoVelocityIsentropic, ///< 4x4, pressure speed c_0
    AddedMass,             ///< 4x4 (+2 decoupled entropies), speed c_kappa
    TwoFluidOneVelocity,   ///< 5x5 viscous, speed c_w
    BaerNunziato,          ///< 7x7, phasic speeds
    Foldy,
    Trammell,
};

std::string model_name(ModelTag tag);

/// Linearized model dW/dt + A dW/dx = B d2W/dx2 around a constant state.
/// B is zero for the inviscid models.
struct LinearSystem {
    Mat A;
    Mat B;
    std::vector<std::string> labels;
    ModelTag model;
    double u0 = 0.0;
};

enum class WaveClass { Material, PressurePlus, PressureMinus };

/// Real eigenvalues of a convection matrix with per-value classification
/// (material vs right/left-going pressure waves relative to u0).
struct EigenSet {
    std::vector<double> values; ///< ascending
    std::vector<WaveClass> classes;
};

/// One-velocity isentropic mixture model in (rho, u, eta). The acoustic
/// entry is the closed-form Wood speed; the d p/d eta entry comes from
/// central differences of the mechanical-equilibrium mixture EoS (it
/// does not influence the spectrum).
LinearSystem build_one_velocity_isentropic(const MixtureState& mix, double u0);

/// One-velocity model with per-phase entropies, variables
/// (rho, u, eta, s+, s-). Pressure eigenvalues are the Wood speed; the
/// acoustic entry is obtained by finite differences of the frozen
/// mixture EoS so the eigen-check is a genuine numerical verification.
LinearSystem build_one_velocity_two_temperature(const MixtureState& mix,
                                                double u0);

/// One-velocity one-temperature model in (rho, u, eta, s). Pressure
/// eigenvalues are the relaxed equilibrium speed; acoustic entry by
/// finite differences of the equilibrium mixture EoS.
LinearSystem build_one_velocity_equilibrium(const MixtureState& mix,
                                            double u0);

/// Two-velocity isentropic model in (p, alpha+, u+, u-) linearized at
/// u+ = u- = u0. Throws BoundaryRegimeError at alpha in {0, 1}.
LinearSystem build_two_velocity_isentropic(const MixtureState& mix,
                                           double u0);

/// 1-D convective Jacobian of the seven-equation two-pressure model in
/// (alpha+, rho+, u+, p+, rho-, u-, p-). Pressures may differ; at rest
/// with equal pressures the spectrum is {+-c+, +-c-, 0,0,0}.
LinearSystem build_baer_nunziato(const FluidCoeffs& plus,
                                 const FluidCoeffs& minus, double alpha_plus,
                                 double u_plus = 0.0, double u_minus = 0.0);

/// Dynamic (two-velocity, no interphase coupling) speed of sound.
double c0(const MixtureState& mix);

/// Added-mass interpolated speed; kappa = 0 gives c0 and
/// kappa -> infinity tends to the Wood speed.
double c_kappa(const MixtureState& mix, double kappa);

/// Characteristic polynomial det(X I - C) by the Faddeev-LeVerrier
/// recursion after diagonal balancing. Exact enough for the well-
/// separated spectra of the N <= 8 systems here.
Poly char_poly(const CMat& C);

/// Characteristic polynomial in X = omega/k of the pencil
/// -i omega I + i k A + k^2 B, i.e. of the matrix A - i k B.
Poly pencil_poly(const LinearSystem& sys, double k);

struct EigenOptions {
    double realness_tol = 1e-9; ///< relative to the spectral radius
};

/// Eigenvalues of the convection matrix A via characteristic polynomial
/// and the shared complex root solver, filtered for realness. Throws
/// HyperbolicityError if any root has an imaginary part above tolerance.
EigenSet eigenvalues(const LinearSystem& sys, const EigenOptions& opt = {});

} // namespace tfa

#endif

#ifndef TFA_EOS_HPP
#define TFA_EOS_HPP

#include <array>
#include <string>

namespace tfa {

/// Complete set of thermodynamic and transport coefficients of one fluid
/// at a point. All quantities in SI units.
struct FluidCoeffs {
    double rho;    ///< density [kg/m^3]
    double p;      ///< pressure [Pa]
    double T;      ///< temperature [K]
    double c;      ///< isentropic sound speed [m/s]
    double c_T;    ///< non-conductive (isothermal) sound speed [m/s]
    double gamma;  ///< heat-capacity ratio C_p/C_v
    double Gamma;  ///< Grueneisen parameter (1/rho) dp/de at constant rho
    double C_v;    ///< isochoric specific heat [J/(kg K)]
    double C_p;    ///< isobaric specific heat [J/(kg K)]
    double chi;    ///< isobaric thermal expansion [1/K]
    double mu;     ///< dynamic viscosity [Pa s]
    double lambda; ///< thermal conductivity [W/(m K)]

    double prandtl() const { return mu * C_p / lambda; }
};

/// Analytic equation of state. Two kinds are shipped: ideal gas and
/// stiffened gas; both are divariant with constant gamma, so the
/// identities c_T^2 = c^2/gamma and Gamma = gamma - 1 hold exactly.
struct EosSpec {
    enum class Kind { IdealGas, StiffenedGas };

    Kind kind = Kind::IdealGas;
    double gamma = 1.4;
    double R = 287.0;     ///< ideal gas: specific gas constant [J/(kg K)]
    double p_inf = 0.0;   ///< stiffened gas: reference pressure [Pa]
    double C_v = 717.5;   ///< stiffened gas: isochoric heat [J/(kg K)]
    double e_ref = 0.0;   ///< stiffened gas: reference internal energy [J/kg]
    std::string name;
};

EosSpec ideal_gas(double gamma, double R, std::string name = "");
EosSpec stiffened_gas(double gamma, double p_inf, double C_v,
                      double e_ref = 0.0, std::string name = "");

/// Stiffened gas calibrated so that coeffs_at(p, T) returns exactly the
/// requested density and sound speed at the reference point.
EosSpec stiffened_gas_for_target(double gamma, double rho_target,
                                 double c_target, double p, double T,
                                 std::string name = "");

/// Evaluates every FluidCoeffs field from the analytic EoS formulas.
/// Transport coefficients are frozen user constants, not EoS outputs.
/// Throws InvalidStateError when p + p_inf <= 0 or T <= 0.
FluidCoeffs coeffs_at(const EosSpec& spec, double p, double T,
                      double mu = 0.0, double lambda = 0.0);

/// Relative residuals of the Gibbs-derived identities:
///   [0] |c_T^2 - c^2/gamma| / c^2
///   [1] |Gamma^2 C_v T - (gamma-1) c^2 / gamma| / c^2
///   [2] |C_p - gamma C_v| / C_p
std::array<double, 3> identity_residuals(const FluidCoeffs& fc);

/// Specific entropy at (p, T); per-EoS additive constant is zero.
double entropy_pT(const EosSpec& spec, double p, double T);

/// Density at (p, T).
double rho_pT(const EosSpec& spec, double p, double T);

/// Density on the isentrope s at pressure p (inverts the entropy form
/// of the EoS). Used by the mixture equation-of-state solvers.
double rho_ps(const EosSpec& spec, double p, double s);

/// Specific volume at (p, T). Convenience wrapper around rho_pT.
double v_pT(const EosSpec& spec, double p, double T);

/// One fluid of a two-fluid configuration: EoS plus frozen transport.
struct FluidSetup {
    EosSpec eos;
    double mu = 0.0;
    double lambda = 0.0;
};

inline constexpr double default_pressure = 101325.0;
inline constexpr double default_temperature = 298.15;

/// Water as stiffened gas, calibrated to rho = 997 kg/m^3 and
/// c = 1497 m/s at the default state. mu = 1.0e-3, lambda = 0.6.
FluidSetup default_water();

/// Air as ideal gas (gamma = 1.4, R = 287), giving rho = 1.184 kg/m^3
/// and c = 346.1 m/s at the default state. mu = 1.8e-5, lambda = 0.026.
FluidSetup default_air();

} // namespace tfa

#endif

#include "tfa/eos.hpp"
#include "tfa/errors.hpp"

#include <cmath>
#include <utility>

namespace tfa {

EosSpec ideal_gas(double gamma, double R, std::string name) {
    if (gamma <= 1.0 || R <= 0.0)
        throw InvalidStateError("ideal_gas: need gamma > 1 and R > 0");
    EosSpec s;
    s.kind = EosSpec::Kind::IdealGas;
    s.gamma = gamma;
    s.R = R;
    s.name = std::move(name);
    return s;
}

EosSpec stiffened_gas(double gamma, double p_inf, double C_v, double e_ref,
                      std::string name) {
    if (gamma <= 1.0 || C_v <= 0.0 || p_inf < 0.0)
        throw InvalidStateError(
            "stiffened_gas: need gamma > 1, C_v > 0, p_inf >= 0");
    EosSpec s;
    s.kind = EosSpec::Kind::StiffenedGas;
    s.gamma = gamma;
    s.p_inf = p_inf;
    s.C_v = C_v;
    s.e_ref = e_ref;
    s.name = std::move(name);
    return s;
}

EosSpec stiffened_gas_for_target(double gamma, double rho_target,
                                 double c_target, double p, double T,
                                 std::string name) {
    // c^2 = gamma (p + p_inf)/rho fixes p_inf; the density at (p, T)
    // then fixes C_v through rho = (p + p_inf) / ((gamma-1) C_v T).
    const double p_inf = rho_target * c_target * c_target / gamma - p;
    if (p_inf < 0.0)
        throw InvalidStateError("stiffened_gas_for_target: negative p_inf");
    const double C_v = (p + p_inf) / ((gamma - 1.0) * rho_target * T);
    return stiffened_gas(gamma, p_inf, C_v, 0.0, std::move(name));
}

FluidCoeffs coeffs_at(const EosSpec& spec, double p, double T, double mu,
                      double lambda) {
    if (T <= 0.0)
        throw InvalidStateError("coeffs_at: T <= 0");
    FluidCoeffs fc{};
    fc.p = p;
    fc.T = T;
    fc.mu = mu;
    fc.lambda = lambda;
    fc.gamma = spec.gamma;
    fc.Gamma = spec.gamma - 1.0;
    switch (spec.kind) {
    case EosSpec::Kind::IdealGas:
        if (p <= 0.0)
            throw InvalidStateError("coeffs_at: p <= 0 for ideal gas");
        fc.rho = p / (spec.R * T);
        fc.C_v = spec.R / (spec.gamma - 1.0);
        fc.c = std::sqrt(spec.gamma * spec.R * T);
        break;
    case EosSpec::Kind::StiffenedGas: {
        const double pe = p + spec.p_inf;
        if (pe <= 0.0)
            throw InvalidStateError("coeffs_at: p + p_inf <= 0");
        fc.rho = pe / ((spec.gamma - 1.0) * spec.C_v * T);
        fc.C_v = spec.C_v;
        fc.c = std::sqrt(spec.gamma * pe / fc.rho);
        break;
    }
    }
    fc.C_p = spec.gamma * fc.C_v;
    fc.c_T = fc.c / std::sqrt(spec.gamma);
    fc.chi = 1.0 / T; // exact for both shipped EoS
    return fc;
}

std::array<double, 3> identity_residuals(const FluidCoeffs& fc) {
    const double c2 = fc.c * fc.c;
    const double r0 = std::abs(fc.c_T * fc.c_T - c2 / fc.gamma) / c2;
    const double r1 =
        std::abs(fc.Gamma * fc.Gamma * fc.C_v * fc.T -
                 (fc.gamma - 1.0) / fc.gamma * c2) / c2;
    const double r2 = std::abs(fc.C_p - fc.gamma * fc.C_v) / fc.C_p;
    return {r0, r1, r2};
}

double rho_pT(const EosSpec& spec, double p, double T) {
    return coeffs_at(spec, p, T).rho;
}

double v_pT(const EosSpec& spec, double p, double T) {
    return 1.0 / rho_pT(spec, p, T);
}

double entropy_pT(const EosSpec& spec, double p, double T) {
    // s = C_v ln((p + p_inf)/rho^gamma) with p_inf = 0 for the ideal gas.
    const FluidCoeffs fc = coeffs_at(spec, p, T);
    const double pe = p + (spec.kind == EosSpec::Kind::StiffenedGas ? spec.p_inf : 0.0);
    return fc.C_v * (std::log(pe) - spec.gamma * std::log(fc.rho));
}

double rho_ps(const EosSpec& spec, double p, double s) {
    const double pe = p + (spec.kind == EosSpec::Kind::StiffenedGas ? spec.p_inf : 0.0);
    if (pe <= 0.0)
        throw InvalidStateError("rho_ps: p + p_inf <= 0");
    const double C_v =
        (spec.kind == EosSpec::Kind::StiffenedGas) ? spec.C_v
                                                   : spec.R / (spec.gamma - 1.0);
    // invert s = C_v (ln pe - gamma ln rho)
    return std::exp((std::log(pe) - s / C_v) / spec.gamma);
}

FluidSetup default_water() {
    FluidSetup f;
    f.eos = stiffened_gas_for_target(5.5, 997.0, 1497.0, default_pressure,
                                     default_temperature, "water");
    f.mu = 1.0e-3;
    f.lambda = 0.6;
    return f;
}

FluidSetup default_air() {
    FluidSetup f;
    f.eos = ideal_gas(1.4, 287.0, "air");
    f.mu = 1.8e-5;
    f.lambda = 0.026;
    return f;
}

} // namespace tfa

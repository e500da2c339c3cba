#include "tfa/mixture.hpp"
#include "tfa/errors.hpp"

#include <cmath>
#include <limits>

namespace tfa {

MixtureState make_mixture(const FluidSetup& plus, const FluidSetup& minus,
                          double p, double T, double alpha_plus) {
    if (alpha_plus < 0.0 || alpha_plus > 1.0)
        throw DegenerateMixtureError("make_mixture: alpha_plus outside [0,1]");
    MixtureState m;
    m.plus = coeffs_at(plus.eos, p, T, plus.mu, plus.lambda);
    m.minus = coeffs_at(minus.eos, p, T, minus.mu, minus.lambda);
    m.alpha_plus = alpha_plus;
    return m;
}

MixtureState default_mixture(double alpha_plus) {
    return make_mixture(default_water(), default_air(), default_pressure,
                        default_temperature, alpha_plus);
}

static void check_phases(const MixtureState& mix) {
    if (mix.plus.rho <= 0.0 || mix.minus.rho <= 0.0 || mix.plus.c <= 0.0 ||
        mix.minus.c <= 0.0)
        throw DegenerateMixtureError("mixture: non-positive rho or c");
    if (mix.rho() <= 0.0)
        throw DegenerateMixtureError("mixture: mean density vanishes");
}

double wood_speed(const MixtureState& mix) {
    check_phases(mix);
    const double am = mix.alpha_minus();
    const double inv = am / (mix.minus.rho * mix.minus.c * mix.minus.c) +
                       mix.alpha_plus / (mix.plus.rho * mix.plus.c * mix.plus.c);
    return 1.0 / std::sqrt(mix.rho() * inv);
}

double wood_speed_mass_form(const MixtureState& mix) {
    check_phases(mix);
    const double rho = mix.rho();
    const double inv =
        mix.eta_minus() / (mix.minus.rho * mix.minus.rho * mix.minus.c * mix.minus.c) +
        mix.eta_plus() / (mix.plus.rho * mix.plus.rho * mix.plus.c * mix.plus.c);
    return 1.0 / (rho * std::sqrt(inv));
}

double wood_speed_isothermal_gas(const MixtureState& mix) {
    check_phases(mix);
    const double am = mix.alpha_minus();
    const double inv =
        am / (mix.minus.rho * mix.minus.c_T * mix.minus.c_T) +
        mix.alpha_plus / (mix.plus.rho * mix.plus.c * mix.plus.c);
    return 1.0 / std::sqrt(mix.rho() * inv);
}

WoodMinimum wood_minimum(const FluidCoeffs& plus, const FluidCoeffs& minus) {
    MixtureState m{plus, minus, 0.5};
    auto cw = [&](double a) {
        m.alpha_plus = a;
        return wood_speed(m);
    };
    // golden-section search on [0,1] to |dalpha| < 1e-10
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = cw(x1), f2 = cw(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cw(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cw(x2);
        }
    }
    WoodMinimum out;
    out.alpha_min = 0.5 * (lo + hi);
    // endpoints can win for near-identical fluids
    const double c_int = cw(out.alpha_min);
    const double c0 = cw(0.0), c1 = cw(1.0);
    out.c_min = c_int;
    if (c0 < out.c_min) {
        out.c_min = c0;
        out.alpha_min = 0.0;
    }
    if (c1 < out.c_min) {
        out.c_min = c1;
        out.alpha_min = 1.0;
    }
    // printed closed form, advisory only (the printed minimum value has
    // an unresolvable symbol, so only the minimizer is cross-checked)
    const double rp = plus.rho, cp = plus.c, rm = minus.rho, cm = minus.c;
    const double num = rp * rp * cp * cp + rm * rm * cm * cm - 2.0 * rm * rp * cp * cp;
    const double den = -rp * rm * cm * cm + rm * rm * cm * cm + rp * rp * cp * cp -
                       rm * rp * cp * cp;
    out.alpha_min_printed = (den != 0.0) ? 0.5 * num / den
                                         : std::numeric_limits<double>::quiet_NaN();
    return out;
}

WoodMinimum wood_minimum_light_phase_approx(const FluidCoeffs& plus,
                                            const FluidCoeffs& minus) {
    // the approximation assumes the light phase carries the "+" label
    const FluidCoeffs& light = (plus.rho <= minus.rho) ? plus : minus;
    const FluidCoeffs& heavy = (plus.rho <= minus.rho) ? minus : plus;
    WoodMinimum out;
    out.c_min = 2.0 * light.c * std::sqrt(light.rho / heavy.rho);
    out.alpha_min = 0.5;
    out.alpha_min_printed = out.alpha_min;
    // report the minimizer in terms of the caller's "+" phase
    if (&light == &minus)
        out.alpha_min = 1.0 - out.alpha_min;
    return out;
}

std::pair<double, double> nguyen_stratified(const MixtureState& mix) {
    check_phases(mix);
    const double ap = mix.alpha_plus, am = mix.alpha_minus();
    if (ap <= 0.0 || am <= 0.0)
        throw BoundaryRegimeError(
            "nguyen_stratified: both phases must be present");
    const double cp2 = mix.plus.c * mix.plus.c, cm2 = mix.minus.c * mix.minus.c;
    const double inv_m =
        1.0 / cm2 + (ap / am) * (mix.minus.rho / mix.plus.rho) / cp2;
    const double inv_p =
        1.0 / cp2 + (am / ap) * (mix.plus.rho / mix.minus.rho) / cm2;
    return {1.0 / std::sqrt(inv_m), 1.0 / std::sqrt(inv_p)};
}

double nguyen_slug(const MixtureState& mix) {
    check_phases(mix);
    return 1.0 /
           (mix.alpha_plus / mix.plus.c + mix.alpha_minus() / mix.minus.c);
}

std::pair<double, double> nguyen_bubbly_effective(const MixtureState& mix) {
    check_phases(mix);
    const double ap = mix.alpha_plus, am = mix.alpha_minus();
    const double cp2 = mix.plus.c * mix.plus.c, cm2 = mix.minus.c * mix.minus.c;
    const double inv_m = am / cm2 + (mix.minus.rho / mix.plus.rho) * ap / cp2;
    const double inv_p = ap / cp2 + (mix.plus.rho / mix.minus.rho) * am / cm2;
    return {1.0 / std::sqrt(inv_m), 1.0 / std::sqrt(inv_p)};
}

double nguyen_bubbly(const MixtureState& mix) {
    const auto [ceff_m, ceff_p] = nguyen_bubbly_effective(mix);
    return 1.0 / (mix.alpha_plus / ceff_p + mix.alpha_minus() / ceff_m);
}

double wood_from_effective(const MixtureState& mix) {
    const auto [ceff_m, ceff_p] = nguyen_bubbly_effective(mix);
    const double inv =
        mix.alpha_minus() / (mix.minus.rho * ceff_m * ceff_m) +
        mix.alpha_plus / (mix.plus.rho * ceff_p * ceff_p);
    const double c = 1.0 / std::sqrt(mix.rho() * inv);
    const double cw = wood_speed(mix);
    if (std::abs(c - cw) > 1e-12 * cw)
        throw Error("wood_from_effective: confinement factors failed to cancel");
    return c;
}

EquilibriumSpeeds equilibrium_speed(const MixtureState& mix) {
    check_phases(mix);
    const double rho = mix.rho();
    const double etap = mix.eta_plus(), etam = mix.eta_minus();
    const double ap = mix.alpha_plus, am = mix.alpha_minus();
    const FluidCoeffs& P = mix.plus;
    const FluidCoeffs& M = mix.minus;

    const double inv_T = etap / (P.rho * P.rho * P.c_T * P.c_T) +
                         etam / (M.rho * M.rho * M.c_T * M.c_T);
    EquilibriumSpeeds out;
    out.c_T_eq = 1.0 / (rho * std::sqrt(inv_T));

    // isentropic equilibrium speed: subtract the heat-capacity term from
    // the isothermal compressibility, per unit mass (hence the 1/rho^2).
    const double T = P.T;
    const double chi = ap * P.chi + am * M.chi;
    const double Cp = etap * P.C_p + etam * M.C_p;
    const double inv_s = inv_T - T * chi * chi / (rho * rho * Cp);
    if (inv_s <= 0.0)
        throw InvalidStateError("equilibrium_speed: non-positive compressibility");
    out.c_eq = 1.0 / (rho * std::sqrt(inv_s));

    // equivalent ratio form (Temkin); agreement certifies that the
    // inputs actually encode a common (p, T) equilibrium
    const double t1 = rho / M.rho *
                      (M.gamma * am +
                       P.gamma * ap * (M.rho * M.c * M.c) / (P.rho * P.c * P.c));
    const double t2 = (M.gamma - 1.0) * (am + ap * P.chi / M.chi) /
                      (etam + etap * P.C_p / M.C_p);
    const double c_eq_ratio = std::sqrt(M.c * M.c / (t1 - t2));
    if (std::abs(c_eq_ratio - out.c_eq) > 1e-10 * out.c_eq)
        throw InvalidStateError(
            "equilibrium_speed: equivalent forms disagree; phases are not "
            "in a common (p, T) equilibrium");
    return out;
}

double mixture_pressure_frozen(const EosSpec& plus, double s_plus,
                               const EosSpec& minus, double s_minus,
                               double rho, double eta) {
    if (rho <= 0.0)
        throw DegenerateMixtureError("mixture_pressure_frozen: rho <= 0");
    const double etap = 0.5 * (1.0 + eta), etam = 0.5 * (1.0 - eta);
    const double v_target = 1.0 / rho;
    auto vol = [&](double p) {
        return etap / rho_ps(plus, p, s_plus) + etam / rho_ps(minus, p, s_minus);
    };
    // v(p) is strictly decreasing; bracket then bisect with Newton steps
    double lo = 1.0, hi = 1.0e9;
    while (vol(lo) < v_target && lo > 1e-12) lo *= 0.25;
    while (vol(hi) > v_target && hi < 1e15) hi *= 4.0;
    if (vol(lo) < v_target || vol(hi) > v_target)
        throw NonConvergenceError("mixture_pressure_frozen: no bracket");
    double p = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double v = vol(p);
        if (v > v_target)
            lo = p;
        else
            hi = p;
        // dv/dp along the isentropes
        const double rp = rho_ps(plus, p, s_plus);
        const double rm = rho_ps(minus, p, s_minus);
        const double pe_p = p + (plus.kind == EosSpec::Kind::StiffenedGas ? plus.p_inf : 0.0);
        const double pe_m = p + (minus.kind == EosSpec::Kind::StiffenedGas ? minus.p_inf : 0.0);
        const double cp2 = plus.gamma * pe_p / rp;   // phasic c^2 on the isentrope
        const double cm2 = minus.gamma * pe_m / rm;
        const double dvdp = -etap / (rp * rp * cp2) - etam / (rm * rm * cm2);
        double pn = p - (v - v_target) / dvdp;
        if (!(pn > lo && pn < hi)) pn = 0.5 * (lo + hi);
        if (std::abs(pn - p) <= 1e-15 * std::abs(p)) return pn;
        p = pn;
    }
    return p;
}

EquilibriumPoint mixture_equilibrium_state(const EosSpec& plus,
                                           const EosSpec& minus, double rho,
                                           double eta, double s,
                                           EquilibriumPoint guess) {
    const double etap = 0.5 * (1.0 + eta), etam = 0.5 * (1.0 - eta);
    double p = guess.p, T = guess.T;
    const double v_target = 1.0 / rho;
    for (int it = 0; it < 100; ++it) {
        const FluidCoeffs fp = coeffs_at(plus, p, T);
        const FluidCoeffs fm = coeffs_at(minus, p, T);
        const double vp = 1.0 / fp.rho, vm = 1.0 / fm.rho;
        const double F1 = etap * vp + etam * vm - v_target;
        const double F2 =
            etap * entropy_pT(plus, p, T) + etam * entropy_pT(minus, p, T) - s;
        // analytic Jacobian: dv/dp|T = -v/(rho v c_T^2)... = -1/(rho^2 c_T^2),
        // dv/dT|p = v chi, ds/dT|p = C_p/T, ds/dp|T = -v chi (Maxwell)
        const double dv_dp =
            -etap / (fp.rho * fp.rho * fp.c_T * fp.c_T) -
            etam / (fm.rho * fm.rho * fm.c_T * fm.c_T);
        const double dv_dT = etap * vp * fp.chi + etam * vm * fm.chi;
        const double ds_dp = -(etap * vp * fp.chi + etam * vm * fm.chi);
        const double ds_dT = (etap * fp.C_p + etam * fm.C_p) / T;
        const double det = dv_dp * ds_dT - dv_dT * ds_dp;
        if (det == 0.0)
            throw NonConvergenceError("mixture_equilibrium_state: singular Jacobian");
        const double dp = (-F1 * ds_dT + F2 * dv_dT) / det;
        const double dT = (-F2 * dv_dp + F1 * ds_dp) / det;
        double step = 1.0;
        // keep T and p + p_inf positive
        while (T + step * dT <= 0.0) step *= 0.5;
        p += step * dp;
        T += step * dT;
        if (std::abs(dp) <= 1e-13 * std::max(1.0, std::abs(p)) &&
            std::abs(dT) <= 1e-13 * std::abs(T))
            return {p, T};
    }
    throw NonConvergenceError("mixture_equilibrium_state: Newton stalled");
}

} // namespace tfa

#include "tfa/polyroot.hpp"
#include "tfa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tfa {

cplx Poly::eval(cplx x) const {
    cplx y = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) y = y * x + *it;
    return y;
}

cplx Poly::deriv_eval(cplx x) const {
    cplx y = 0.0;
    for (int k = degree(); k >= 1; --k) y = y * x + static_cast<double>(k) * c[k];
    return y;
}

Poly Poly::derivative() const {
    Poly d;
    if (degree() < 1) {
        d.c = {cplx(0.0)};
        return d;
    }
    d.c.resize(c.size() - 1);
    for (int k = 1; k <= degree(); ++k) d.c[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

int Poly::deflate_zero_roots() {
    int m = 0;
    while (c.size() > 1 && c.front() == cplx(0.0)) {
        c.erase(c.begin());
        ++m;
    }
    return m;
}

std::vector<cplx> aberth_roots(const Poly& p_in, const AberthOptions& opt) {
    const int n = p_in.degree();
    if (n < 1 || p_in.c.back() == cplx(0.0))
        throw Error("aberth_roots: need degree >= 1 with nonzero leading coefficient");

    Poly p;
    p.c.resize(p_in.c.size());
    const cplx lead = p_in.c.back();
    for (size_t i = 0; i < p_in.c.size(); ++i) p.c[i] = p_in.c[i] / lead;

    double cmax = 0.0;
    for (int i = 0; i < n; ++i) cmax = std::max(cmax, std::abs(p.c[i]));
    const double radius = 1.0 + cmax;

    // deterministic starting points: equispaced on the circle with a fixed
    // phase offset so no start coincides with a real axis root
    std::vector<cplx> z(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * i / n + 0.7;
        z[i] = radius * cplx(std::cos(th), std::sin(th));
    }

    std::vector<cplx> step(n);
    for (int it = 0; it < opt.max_iter; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const cplx pv = p.eval(z[i]);
            const cplx dv = p.deriv_eval(z[i]);
            cplx w;
            if (dv == cplx(0.0)) {
                w = pv == cplx(0.0) ? cplx(0.0) : cplx(1e-8 * radius, 1e-8 * radius);
            } else {
                w = pv / dv;
            }
            cplx rep = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            step[i] = w / (1.0 - w * rep);
            worst = std::max(worst,
                             std::abs(step[i]) / std::max(1.0, std::abs(z[i])));
        }
        for (int i = 0; i < n; ++i) z[i] -= step[i];
        if (worst < opt.tol) {
            if (opt.polish) {
                for (int i = 0; i < n; ++i) {
                    const cplx dv = p.deriv_eval(z[i]);
                    if (dv != cplx(0.0)) z[i] -= p.eval(z[i]) / dv;
                }
            }
            std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
                if (a.real() != b.real()) return a.real() > b.real();
                return a.imag() > b.imag();
            });
            return z;
        }
    }
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(p.eval(z[i])));
    std::ostringstream msg;
    msg << "aberth_roots: no convergence after " << opt.max_iter
        << " iterations, worst residual " << res;
    throw NonConvergenceError(msg.str());
}

} // namespace tfa

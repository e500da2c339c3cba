#ifndef TFA_POLYROOT_HPP
#define TFA_POLYROOT_HPP

#include "tfa/smallmat.hpp"

#include <vector>

namespace tfa {

/// Polynomial with complex coefficients, stored ascending:
/// p(x) = c[0] + c[1] x + ... + c[n] x^n.
struct Poly {
    std::vector<cplx> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cplx eval(cplx x) const;
    cplx deriv_eval(cplx x) const;
    Poly derivative() const;

    /// Divides out x^m where m is the number of exactly-zero trailing
    /// coefficients (roots at the origin), returning m.
    int deflate_zero_roots();
};

struct AberthOptions {
    double tol = 1e-13;   ///< stop when max correction < tol * max(1, |z|)
    int max_iter = 200;
    bool polish = true;   ///< one terminal Newton step per root
};

/// All complex roots by the Aberth-Ehrlich simultaneous iteration with
/// deterministic initial guesses on a circle of radius 1 + max|coeff|
/// (after monic normalization). Deterministic: identical inputs give
/// bitwise-identical output order. Throws NonConvergenceError with the
/// worst residual if the iteration does not settle.
std::vector<cplx> aberth_roots(const Poly& p, const AberthOptions& opt = {});

} // namespace tfa

#endif

#pragma once

#include <cmath>
#include <complex>

#include "primelab/errors.hpp"

namespace primelab {

namespace detail {

inline double quad_norm(double x) { return std::abs(x); }
inline double quad_norm(std::complex<double> x) { return std::abs(x); }

template <typename F, typename V>
V simpson_step(F& f, double a, double b, V fa, V fm, V fb, V whole, double tol,
               int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const V flm = f(lm);
    const V frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V err = left + right - whole;
    if (quad_norm(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth >= max_depth) {
        if (quad_norm(err) > 1e6 * tol)
            throw numeric_error("adaptive quadrature failed to converge");
        return left + right + err / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Simpson quadrature over [a, b] with absolute tolerance `tol`.
// Works for double and complex<double> integrands.
template <typename F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48)
    -> decltype(f(a)) {
    using V = decltype(f(a));
    if (a == b) return V{};
    const double m = 0.5 * (a + b);
    const V fa = f(a);
    const V fm = f(m);
    const V fb = f(b);
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

}  // namespace primelab

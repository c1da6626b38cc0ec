#pragma once

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "grunlab/errors.hpp"

namespace grunlab {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_subdivisions = 60;

    void validate() const {
        if (!(abs_tol > 0.0)) throw ParameterError("QuadratureSpec: abs_tol must be > 0");
        if (max_subdivisions < 1) throw ParameterError("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

namespace detail {

template <class F>
struct SimpsonState {
    const F& f;
    int max_depth;
    bool exhausted = false;
};

template <class F>
double simpson_step(SimpsonState<F>& st, double a, double fa, double m, double fm, double b, double fb,
                    double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    const double right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    const double diff = left + right - whole;
    if (std::fabs(diff) <= 15.0 * eps) return left + right + diff / 15.0;
    if (depth >= st.max_depth) {
        st.exhausted = true;
        return left + right + diff / 15.0;
    }
    return simpson_step(st, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1) +
           simpson_step(st, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1);
}

}  // namespace detail

/// Adaptive Simpson on [a, b]. Throws ConvergenceError (with the best
/// estimate) when the recursion depth limit is hit before abs_tol is met.
template <class F>
double adaptive_simpson(const F& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return 0.0;
    detail::SimpsonState<F> st{f, spec.max_subdivisions};
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    const double result = detail::simpson_step(st, a, fa, m, fm, b, fb, whole, spec.abs_tol, 0);
    if (st.exhausted) {
        throw ConvergenceError("adaptive Simpson did not reach abs_tol within " +
                                   std::to_string(spec.max_subdivisions) + " subdivision levels",
                               result);
    }
    return result;
}

/// Fixed 20-point Gauss-Legendre on [a, b].
template <class F>
double gauss_legendre20(const F& f, double a, double b) {
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

/// Double-exponential quadrature; tolerant of integrable endpoint singularities.
template <class F>
double tanh_sinh(const F& f, double a, double b, double rel_tol = 1e-13) {
    if (a == b) return 0.0;
    static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, rel_tol);
}

/// Euler Beta function B(x, y) via log-gamma.
inline double beta_function(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace grunlab

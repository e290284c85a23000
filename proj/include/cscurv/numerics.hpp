#ifndef CSCURV_NUMERICS_HPP
#define CSCURV_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

// Small numerical building blocks shared by the solver and the
// post-processing modules: cubic Hermite interpolation on an ordered grid,
// Gauss-Kronrod quadrature, least-squares fits and root bisection.

namespace cscurv {

inline constexpr double kPi = 3.14159265358979323846;

/// Volume of the unit sphere S^{n-1}, i.e. omega_n = 2 pi^{n/2} / Gamma(n/2).
/// Gamma at integer and half-integer arguments is evaluated by upward
/// recursion from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
double sphere_area(int n);

/// Piecewise cubic Hermite interpolant over a strictly increasing grid.
/// Values and first derivatives are matched at every node, so the curve is
/// C^1 and reproduces cubics exactly.
class CubicHermite {
  public:
    CubicHermite() = default;
    CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> dy);

    double value(double t) const;
    double deriv(double t) const;
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    std::size_t size() const { return x_.size(); }
    const std::vector<double>& knots() const { return x_; }

  private:
    std::size_t locate(double t) const;
    std::vector<double> x_, y_, dy_;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature of f over [a, b].
/// Subdivides until the local Kronrod-Gauss discrepancy is below the
/// tolerance share of the interval; depth-limited to avoid runaway
/// recursion on non-integrable inputs.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 28);

/// Single (G7,K15) panel; returns the K15 value and the |K15-G7| error gauge.
std::pair<double, double> gauss_kronrod_15(const std::function<double(double)>& f,
                                           double a, double b);

struct LineFit {
    double intercept = 0;
    double slope = 0;
    double slope_stderr = 0;  // standard error of the slope
    double rms_residual = 0;
};

/// Ordinary least squares of y against x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct ExpPairFit {
    double a = 0;  // coefficient of e^{-m s}
    double b = 0;  // coefficient of e^{+m s}
    double rms_residual = 0;
};

/// Least-squares fit of w(s) = a e^{-m s} + b e^{m s} on sample pairs (s, w).
ExpPairFit fit_exp_pair(std::span<const double> s, std::span<const double> w, double m);

/// Bisection for a sign change of f on [lo, hi]; assumes f(lo) and f(hi)
/// have opposite signs. Refines to |hi - lo| < xtol_rel * max(1, |hi|).
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol_rel = 1e-12, int max_iter = 200);

/// Thin an increasing positive sequence to roughly `per_decade` samples per
/// decade; returns indices into the input, always keeping first and last.
std::vector<std::size_t> thin_log(std::span<const double> x, int per_decade = 64);

}  // namespace cscurv

#endif

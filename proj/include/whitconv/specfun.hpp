#pragma once

// Special functions behind the kernel: complex gamma, incomplete gamma, the
// parabolic cylinder function D_mu (mu < 1), the Laplace-representation
// density eta_x, and the kernel W itself with its two independent evaluation
// routes (Tricomi function vs Laplace-type integral).

#include <complex>
#include <memory>
#include <vector>

#include "whitconv/errors.hpp"
#include "whitconv/params.hpp"

namespace whitconv {

std::complex<double> log_gamma_complex(std::complex<double> z);

// Gamma(z) to >= 12 significant digits for |z| <= 50. Throws GammaPoleError at
// nonpositive integers.
std::complex<double> gamma_complex(std::complex<double> z);

// Upper incomplete gamma Gamma(a,x) = int_x^inf t^{a-1} e^{-t} dt.
// x = 0 requires a > 0 (otherwise DivergenceError).
double upper_incomplete_gamma(double a, double x);

// Scaled form e^x x^{1-a} Gamma(a,x); tends to 1 as x -> inf. Stable for the
// weight-integral identities where Gamma(a,x) alone under/overflows.
double upper_incomplete_gamma_scaled(double a, double x);

// Parabolic cylinder function D_mu(t) for mu < 1, t > 0, by quadrature of the
// integral representation; relative accuracy ~1e-12 on t in [1e-3, 50].
double parabolic_cylinder_D(double mu, double t);

// Scaled cylinder S_mu(t) = e^{t^2/4} D_mu(t), evaluated through a per-order
// Chebyshev table (piecewise on t in [0,T]) plus the asymptotic series beyond.
// Immutable after construction; shared through Params-keyed memoization.
class ScaledCylinder {
public:
    explicit ScaledCylinder(double mu);
    double operator()(double t) const;
    double mu() const { return mu_; }

private:
    double mu_;
    double t_switch_;
    double at_zero_;
    std::vector<double> breaks_;
    std::vector<std::vector<double>> coef_; // Chebyshev coefficients per panel
    double eval_cheb(size_t panel, double t) const;
    double eval_asymptotic(double t) const;
};

// Shared cylinder tables for one alpha: orders 2a, 2a-1, 2a-2 (the latter two
// feed the differentiated Laplace representation).
struct CylinderSet {
    ScaledCylinder s0, s1, s2;
    explicit CylinderSet(double alpha)
        : s0(2 * alpha), s1(2 * alpha - 1), s2(2 * alpha - 2) {}
};
std::shared_ptr<const CylinderSet> cylinder_set(double alpha);

// eta_x(s) of the Laplace representation; nonnegative, even in s.
double eta_kernel(const Params& p, double x, double s);

enum class KernelRoute { Tricomi, Laplace, Auto };

// The kernel W_{alpha,nu}(x). W(0) = 1 exactly; identically 1 at
// nu = 1/2 - alpha. Routes agree to ~1e-8 relative on the strip.
double bW(const Params& p, const Order& nu, double x, KernelRoute route = KernelRoute::Auto,
          const QuadConfig& cfg = {}, Warnings* warn = nullptr);

// d/dx or d^2/dx^2 of x -> W_{alpha,nu}(x), x > 0, by differentiating the
// Laplace representation under the integral sign.
double bW_dx(const Params& p, const Order& nu, double x, int order,
             const QuadConfig& cfg = {});

// Leading term of the uniform large-tau expansion of W_{alpha,i tau}(x).
double bW_asymptotic_itau(const Params& p, double tau, double x);

// Tabulated eta_x profile on adaptive Gauss-Kronrod panels. Once built for a
// given x, the kernel at any order up to the construction caps is a weighted
// sum over the stored nodes; this is what makes transforms over many spectral
// points affordable.
class KernelTable {
public:
    KernelTable(const Params& p, double x, double tau_cap, double real_nu_cap,
                const QuadConfig& cfg = {});

    double x() const { return x_; }
    double tau_cap() const { return tau_cap_; }

    // 2 * int_0^S cos(tau s) eta_x(s) ds
    double eval_cos(double tau) const;
    // 2 * int_0^S cosh(nu s) eta_x(s) ds
    double eval_cosh(double nu) const;
    double eval(const Order& nu) const {
        return nu.is_real() ? eval_cosh(nu.value) : eval_cos(nu.value);
    }
    // 2 * int_0^S g(s) eta_x(s) ds for an arbitrary even-extension weight
    template <class F>
    double eval_weighted(F&& g) const {
        double acc = 0;
        for (size_t i = 0; i < s_.size(); ++i) acc += w_[i] * g(s_[i]) * eta_[i];
        return 2 * acc;
    }

private:
    double x_, tau_cap_;
    std::vector<double> s_, w_, eta_;
};

} // namespace whitconv

#pragma once

// The index Whittaker transform pair: weight m, spectral density rho, forward
// transform of functions and measures, inverse transform, and the weak
// convergence diagnostic.

#include <functional>
#include <vector>

#include "whitconv/measures.hpp"
#include "whitconv/params.hpp"
#include "whitconv/specfun.hpp"

namespace whitconv {

// m(x) = x^{1-4 alpha} e^{-1/(2x^2)}, x > 0
double m_weight(const Params& p, double x);

// spectral density rho(lambda) on Lambda = ((1/2-a)^2, inf); 0 at and below
// the boundary
double rho_density(const Params& p, double lambda);
double log_rho_density(const Params& p, double tau); // in the tau variable

// forward transform of a function given on [lo,hi]:
// fhat(lambda) = int f(x) W_{a,Delta_lambda}(x) m(x) dx
double forward_transform(const Params& p, const std::function<double(double)>& f, double lo,
                         double hi, const SpectralPoint& pt, const QuadConfig& cfg = {});

// the same against many spectral points, sharing the x-panels and the
// eta-profile per node (the affordable path for inversions and checks)
std::vector<double> forward_transform_profile(const Params& p,
                                              const std::function<double(double)>& f, double lo,
                                              double hi, const std::vector<SpectralPoint>& pts,
                                              const QuadConfig& cfg = {});

double forward_transform(const Params& p, const GridDensity& g, const SpectralPoint& pt,
                         const QuadConfig& cfg = {});

double transform_of_measure(const Params& p, const DiscreteMeasure& mu, const SpectralPoint& pt,
                            const QuadConfig& cfg = {});
double transform_of_measure(const Params& p, const Measure& mu, const SpectralPoint& pt,
                            const QuadConfig& cfg = {});

// inverse transform at x > 0:
//   f(x) = int_{(1/2-a)^2}^inf fhat(lambda) W(x) rho(lambda) dlambda,
// integrated in tau (lambda = tau^2 + (1/2-a)^2) with adaptive truncation;
// throws TailError when the integrand does not decay.
double inverse_transform(const Params& p, const std::function<double(double)>& fhat, double x,
                         const QuadConfig& cfg = {});

// Inversion of the same integrand on a whole x-grid, sharing the tau panels.
std::vector<double> inverse_transform_grid(const Params& p,
                                           const std::function<double(double)>& fhat,
                                           const std::vector<double>& xs,
                                           const QuadConfig& cfg = {});

struct WeakConvergenceReport {
    std::vector<double> sup_gaps; // one per measure in the sequence
    bool nonincreasing_tail = false;
    double final_gap = 0;
};

WeakConvergenceReport weak_convergence_check(const Params& p,
                                             const std::vector<DiscreteMeasure>& mus,
                                             const DiscreteMeasure& target,
                                             const std::vector<double>& lambda_grid,
                                             const QuadConfig& cfg = {});

} // namespace whitconv

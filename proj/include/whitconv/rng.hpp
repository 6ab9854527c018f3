#pragma once

// Reproducible random streams. Each path gets its own engine keyed by
// (seed, stream index), so ensembles are identical for any worker count and
// any evaluation order. The normal sampler is the Wichura AS241 inverse CDF
// on top of mt19937_64 uniforms; both are bit-exact across platforms.

#include <cmath>
#include <cstdint>
#include <random>

namespace whitconv {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Inverse standard-normal CDF (AS241, ~1e-15 accuracy).
inline double inverse_normal_cdf(double p) {
    const double a[8] = {3.3871328727963666080e0, 1.3314166789178437745e2,
                         1.9715909503065514427e3, 1.3731693765509461125e4,
                         4.5921953931549871457e4, 6.7265770927008700853e4,
                         3.3430575583588128105e4, 2.5090809287301226727e3};
    const double b[8] = {1.0, 4.2313330701600911252e1, 6.8718700749205790830e2,
                         5.3941960214247511077e3, 2.1213794301586595867e4,
                         3.9307895800092710610e4, 2.8729085735721942674e4,
                         5.2264952788528545610e3};
    const double c[8] = {1.42343711074968357734e0, 4.63033784615654529590e0,
                         5.76949722146069140550e0, 3.64784832476320460504e0,
                         1.27045825245236838258e0, 2.41780725177450611770e-1,
                         2.27238449892691845833e-2, 7.74545014278341407640e-4};
    const double d[8] = {1.0, 2.05319162663775882187e0, 1.67638483018380384940e0,
                         6.89767334985100004550e-1, 1.48103976427480074590e-1,
                         1.51986665636164571966e-2, 5.47593808499534494600e-4,
                         1.05075007164441684324e-9};
    const double e[8] = {6.65790464350110377720e0, 5.46378491116411436990e0,
                         1.78482653991729133580e0, 2.96560571828504891230e-1,
                         2.65321895265761230930e-2, 1.24266094738807843860e-3,
                         2.71155556874348757815e-5, 2.01033439929228813265e-7};
    const double f[8] = {1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1,
                         1.48753612908506148525e-2, 7.86869131145613259100e-4,
                         1.84631831751005468180e-5, 1.42151175831644588870e-7,
                         2.04426310338993978564e-15};
    double q = p - 0.5, r;
    auto ratio = [](const double* n, const double* m, double t) {
        double num = n[7], den = m[7];
        for (int i = 6; i >= 0; --i) {
            num = num * t + n[i];
            den = den * t + m[i];
        }
        return num / den;
    };
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q * ratio(a, b, r);
    }
    r = q < 0 ? p : 1 - p;
    r = std::sqrt(-std::log(r));
    double v = r <= 5.0 ? ratio(c, d, r - 1.6) : ratio(e, f, r - 5.0);
    return q < 0 ? -v : v;
}

// One independent stream; uniforms in the open interval (0,1).
class RngStream {
public:
    RngStream(uint64_t seed, uint64_t stream)
        : eng_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    double uniform() {
        // 53-bit mantissa, shifted into (0,1)
        uint64_t u = eng_();
        return (static_cast<double>(u >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double normal() { return inverse_normal_cdf(uniform()); }

private:
    std::mt19937_64 eng_;
};

} // namespace whitconv

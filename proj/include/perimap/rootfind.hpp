#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "perimap/dd.hpp"
#include "perimap/errors.hpp"
#include "perimap/rng.hpp"

namespace perimap {

// Simultaneous-iteration (Aberth–Ehrlich) root finder for univariate complex
// polynomials, run in double-double precision. Coefficients are ascending:
// p(z) = c[0] + c[1] z + ... + c[n] z^n.

namespace rootfind_detail {

// Newton ratio p(z)/p'(z), switching to the reversed polynomial at 1/z for
// |z| > 1 so high-degree evaluations cannot overflow.
inline CDD newton_ratio(const std::vector<CDD>& c, const CDD& z, bool& bad) {
    const std::size_t n = c.size() - 1;
    double az2 = cdd_abs2(z).to_double();
    bad = false;
    if (az2 <= 1.0) {
        CDD p(0.0), dp(0.0);
        for (std::size_t k = n + 1; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[k];
        }
        double ap = cdd_abs(p), adp = cdd_abs(dp);
        if (!std::isfinite(ap) || !std::isfinite(adp) || adp == 0.0) {
            bad = true;
            return CDD(0.0);
        }
        return p / dp;
    }
    // w = 1/z, q(w) = reversed coefficients: p/p' = z q(w) / (n q(w) - w q'(w))
    CDD w = CDD(1.0) / z;
    CDD q(0.0), dq(0.0);
    for (std::size_t k = 0; k <= n; ++k) {  // q coeffs are c reversed
        dq = dq * w + q;
        q = q * w + c[k];
    }
    CDD denom = CDD(static_cast<double>(n)) * q - w * dq;
    double ad = cdd_abs(denom);
    if (!std::isfinite(ad) || ad == 0.0) {
        bad = true;
        return CDD(0.0);
    }
    return z * q / denom;
}

// Starting points on circles read off the upper convex hull of (i, log|c_i|)
// (Newton-polygon radii), with randomized phases.
inline std::vector<CDD> initial_points(const std::vector<CDD>& c, Rng& rng) {
    const std::size_t n = c.size() - 1;
    std::vector<double> lg(n + 1, -1e300);
    for (std::size_t i = 0; i <= n; ++i) {
        double a = cdd_abs(c[i]);
        if (a > 0.0) lg[i] = std::log(a);
    }
    std::vector<std::size_t> hull;  // indices of upper hull vertices
    for (std::size_t i = 0; i <= n; ++i) {
        if (lg[i] == -1e300) continue;
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double cross = (lg[b] - lg[a]) * static_cast<double>(i - a) -
                           (lg[i] - lg[a]) * static_cast<double>(b - a);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<CDD> z;
    z.reserve(n);
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        std::size_t k1 = hull[s], k2 = hull[s + 1];
        double r = std::exp((lg[k1] - lg[k2]) / static_cast<double>(k2 - k1));
        r = std::min(std::max(r, 1e-12), 1e12);
        double offset = rng.uniform(0.0, 6.283185307179586);
        for (std::size_t j = 0; j < k2 - k1; ++j) {
            double ph = offset + 6.283185307179586 * (static_cast<double>(j) + 0.5) /
                                     static_cast<double>(k2 - k1);
            z.emplace_back(r * std::cos(ph), r * std::sin(ph));
        }
    }
    while (z.size() < n) z.emplace_back(rng.complex_annulus(0.5, 2.0));
    return z;
}

}  // namespace rootfind_detail

struct RootResult {
    std::vector<std::complex<double>> roots;
    double worst_correction = 0.0;  // last relative Aberth step, a residual proxy
    bool converged = true;
};

inline RootResult aberth_roots(std::vector<CDD> coeffs, std::uint64_t seed, int max_iter = 300,
                               double tol = 1e-24) {
    RootResult out;
    // strip zero leading coefficients
    while (coeffs.size() > 1 && cdd_abs(coeffs.back()) == 0.0) coeffs.pop_back();
    // roots at the origin: strip zero constant terms
    std::size_t zeros_at_origin = 0;
    while (coeffs.size() > 1 && cdd_abs(coeffs.front()) == 0.0) {
        coeffs.erase(coeffs.begin());
        ++zeros_at_origin;
    }
    for (std::size_t i = 0; i < zeros_at_origin; ++i) out.roots.emplace_back(0.0, 0.0);
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return out;
    if (n == 1) {
        out.roots.push_back((-coeffs[0] / coeffs[1]).to_complex());
        return out;
    }

    Rng rng(seed ^ 0xabe57f00dULL);
    std::vector<CDD> z = rootfind_detail::initial_points(coeffs, rng);

    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            bool bad = false;
            CDD ni = rootfind_detail::newton_ratio(coeffs, z[i], bad);
            if (bad) {
                z[i] = CDD(rng.complex_annulus(0.5, 2.0));
                worst = 1.0;
                continue;
            }
            CDD s(0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                CDD d = z[i] - z[j];
                if (cdd_abs(d) == 0.0) {
                    d = CDD(1e-20 * (1.0 + rng.uniform()), 1e-20);
                }
                s += CDD(1.0) / d;
            }
            CDD denom = CDD(1.0) - ni * s;
            CDD w = cdd_abs(denom) > 0.0 ? ni / denom : ni;
            z[i] -= w;
            double rel = cdd_abs(w) / (1.0 + cdd_abs(z[i]));
            worst = std::max(worst, rel);
        }
        out.worst_correction = worst;
        if (worst < tol) break;
    }
    out.converged = out.worst_correction < 1e-10;
    for (auto& zi : z) out.roots.push_back(zi.to_complex());
    return out;
}

inline RootResult aberth_roots(const std::vector<std::complex<double>>& coeffs, std::uint64_t seed,
                               int max_iter = 300) {
    std::vector<CDD> c;
    c.reserve(coeffs.size());
    for (auto& x : coeffs) c.emplace_back(x);
    return aberth_roots(std::move(c), seed, max_iter);
}

}  // namespace perimap

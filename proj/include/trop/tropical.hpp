#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "trop/error.hpp"
#include "trop/rational.hpp"

namespace trop {

// Point of the tropical projective torus R^{d+1}/R1. The canonical
// representative has last coordinate zero; two raw vectors differing by a
// constant shift normalize to the same representative. The scalar type is
// either binary64 or exact Rational; the contracts are identical in both.
template <class T>
struct TorusPoint {
    std::vector<T> coords;

    int dim_plus1() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.coords == b.coords;
    }
};

template <class T>
TorusPoint<T> normalize(std::vector<T> raw) {
    if (raw.size() < 2) fail("DimensionTooSmall", "torus points need at least 2 coordinates");
    const T last = raw.back();
    for (auto& v : raw) v -= last;
    return TorusPoint<T>{std::move(raw)};
}

template <class T>
void check_same_dim(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size() || x.empty()) fail("DimensionMismatch", "coordinate lengths differ");
}

// Tropical metric: max_i(x_i - y_i) - min_i(x_i - y_i). Invariant under
// adding a constant to either argument.
template <class T>
T trop_dist(const std::vector<T>& x, const std::vector<T>& y) {
    check_same_dim(x, y);
    T hi = x[0] - y[0];
    T lo = hi;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const T diff = x[i] - y[i];
        if (diff > hi) hi = diff;
        if (diff < lo) lo = diff;
    }
    return hi - lo;
}

template <class T>
T trop_dist(const TorusPoint<T>& x, const TorusPoint<T>& y) {
    return trop_dist(x.coords, y.coords);
}

// Which open max-/min-sector of the hyperplane with apex x contains u.
// Indices are 0-based; ties resolve to the smallest index and set tie_flag.
struct SectorLocation {
    int max_index = 0;
    int min_index = 0;
    bool tie_flag = false;
};

template <class T>
SectorLocation locate_sectors(const std::vector<T>& u, const std::vector<T>& x) {
    check_same_dim(u, x);
    SectorLocation loc;
    T hi = u[0] - x[0];
    T lo = hi;
    int hi_count = 1, lo_count = 1;
    for (std::size_t i = 1; i < u.size(); ++i) {
        const T diff = u[i] - x[i];
        if (diff > hi) {
            hi = diff;
            loc.max_index = static_cast<int>(i);
            hi_count = 1;
        } else if (diff == hi) {
            ++hi_count;
        }
        if (diff < lo) {
            lo = diff;
            loc.min_index = static_cast<int>(i);
            lo_count = 1;
        } else if (diff == lo) {
            ++lo_count;
        }
    }
    loc.tie_flag = hi_count > 1 || lo_count > 1;
    return loc;
}

template <class T>
SectorLocation locate_sectors(const TorusPoint<T>& u, const TorusPoint<T>& x) {
    return locate_sectors(u.coords, x.coords);
}

// Gradient of u -> trop_dist(u, x): the difference of the max and min sector
// indicator vectors, e_k - e_l. Under ties this is the smallest-index
// subgradient choice; in the fully tied case it degenerates to zero.
template <class T>
std::vector<T> trop_dist_grad(const std::vector<T>& u, const std::vector<T>& x) {
    const SectorLocation loc = locate_sectors(u, x);
    std::vector<T> g(u.size(), T(0));
    g[loc.max_index] += T(1);
    g[loc.min_index] -= T(1);
    return g;
}

template <class T>
std::vector<T> trop_dist_grad(const TorusPoint<T>& u, const TorusPoint<T>& x) {
    return trop_dist_grad(u.coords, x.coords);
}

// Softmin class probabilities p_k = e^{-z_k} / sum_i e^{-z_i}, computed
// stably by shifting by min(z).
inline std::vector<double> softmin_probs(const std::vector<double>& z) {
    if (z.size() < 2) fail("DimensionTooSmall", "softmin needs at least 2 scores");
    const double m = *std::min_element(z.begin(), z.end());
    std::vector<double> p(z.size());
    double total = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        p[i] = std::exp(-(z[i] - m));
        total += p[i];
    }
    for (auto& v : p) v /= total;
    return p;
}

// Jacobian entry (k, j) = dp_k/dz_j = p_k (p_j - delta_kj). The softmin flips
// the sign of the familiar softmax expression; rows sum to zero.
inline std::vector<std::vector<double>> softmin_jacobian(const std::vector<double>& z) {
    const std::vector<double> p = softmin_probs(z);
    const std::size_t k = p.size();
    std::vector<std::vector<double>> jac(k, std::vector<double>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            jac[a][b] = p[a] * (p[b] - (a == b ? 1.0 : 0.0));
        }
    }
    return jac;
}

// Threshold-smoothed tropical distance
//   sum_i (x_i - w_i - tau)^+  -  sum_i (x_i - w_i + tau)^-,
// which penalizes every coordinate beyond the threshold instead of only the
// extremal ones. Note this is a function of the given representatives, not of
// the torus classes.
template <class T>
T smoothed_trop_dist(const std::vector<T>& x, const std::vector<T>& w, const T& tau) {
    check_same_dim(x, w);
    if (!(tau > T(0))) fail("InvalidThreshold", "tau must be positive");
    T acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const T diff = x[i] - w[i];
        if (diff > tau) acc += diff - tau;
        if (diff < -tau) acc -= diff + tau;
    }
    return acc;
}

template <class T>
T smoothed_trop_dist(const TorusPoint<T>& x, const TorusPoint<T>& w, const T& tau) {
    return smoothed_trop_dist(x.coords, w.coords, tau);
}

// Gradient of the smoothed distance in x: [x_i - w_i > tau] - [x_i - w_i < -tau],
// with zero on the hinge boundaries (subgradient choice).
template <class T>
std::vector<T> smoothed_trop_dist_grad(const std::vector<T>& x, const std::vector<T>& w,
                                       const T& tau) {
    check_same_dim(x, w);
    if (!(tau > T(0))) fail("InvalidThreshold", "tau must be positive");
    std::vector<T> g(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        const T diff = x[i] - w[i];
        if (diff > tau) g[i] = T(1);
        else if (diff < -tau) g[i] = T(-1);
    }
    return g;
}

template <class T>
std::vector<T> smoothed_trop_dist_grad(const TorusPoint<T>& x, const TorusPoint<T>& w,
                                       const T& tau) {
    return smoothed_trop_dist_grad(x.coords, w.coords, tau);
}

}  // namespace trop

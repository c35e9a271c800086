#pragma once

// Polynomial roots from companion-matrix eigenvalues, and multiplicity-aware
// clustering of the computed roots.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

namespace trigzero::roots {

using Complex = std::complex<double>;

namespace detail {

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

/// Parlett-Reinsch balancing with radix-2 scaling; the spectrum is unchanged.
template <class Matrix>
void balance(Matrix& A) {
    const Eigen::Index n = A.rows();
    constexpr double radix = 2.0;
    bool converged = false;
    for (int sweep = 0; !converged && sweep < 100; ++sweep) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += magnitude(A(j, i));
                r += magnitude(A(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                converged = false;
                A.row(i) /= f;
                A.col(i) *= f;
            }
        }
    }
}

}  // namespace detail

/// All roots of sum coeffs[i] z^i. Zero leading and trailing coefficients are
/// removed first; each removed low-order coefficient is a root at z = 0.
template <class T>
std::vector<Complex> polynomial_roots(std::span<const T> coeffs) {
    std::size_t hi = coeffs.size();
    while (hi > 0 && coeffs[hi - 1] == T(0)) --hi;
    std::size_t lo = 0;
    while (lo < hi && coeffs[lo] == T(0)) ++lo;
    std::vector<Complex> out(lo, Complex(0.0));
    if (hi == 0 || hi - lo <= 1) return out;

    double scale = 0.0;
    for (std::size_t i = lo; i < hi; ++i) scale = std::max(scale, std::abs(coeffs[i]));
    const Eigen::Index n = static_cast<Eigen::Index>(hi - lo - 1);
    const T lead = coeffs[hi - 1] / scale;

    if constexpr (std::is_same_v<T, double>) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index j = 0; j < n; ++j) A(0, j) = -(coeffs[hi - 2 - j] / scale) / lead;
        for (Eigen::Index i = 1; i < n; ++i) A(i, i - 1) = 1.0;
        detail::balance(A);
        Eigen::EigenSolver<Eigen::MatrixXd> solver(A, false);
        const auto& ev = solver.eigenvalues();
        for (Eigen::Index i = 0; i < n; ++i) out.push_back(ev(i));
    } else {
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
        for (Eigen::Index j = 0; j < n; ++j) A(0, j) = -(coeffs[hi - 2 - j] / scale) / lead;
        for (Eigen::Index i = 1; i < n; ++i) A(i, i - 1) = 1.0;
        detail::balance(A);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, false);
        const auto& ev = solver.eigenvalues();
        for (Eigen::Index i = 0; i < n; ++i) out.push_back(ev(i));
    }
    return out;
}

/// Newton steps on each root, kept only while they reduce the residual.
template <class T>
void polish(std::span<const T> coeffs, std::vector<Complex>& zs, int steps = 3) {
    auto eval = [&](Complex z, Complex& dp) {
        Complex p(0.0);
        dp = Complex(0.0);
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            dp = dp * z + p;
            p = p * z + Complex(coeffs[i]);
        }
        return p;
    };
    for (auto& z : zs) {
        Complex dp;
        double res = std::abs(eval(z, dp));
        for (int s = 0; s < steps && res > 0.0; ++s) {
            if (dp == Complex(0.0)) break;
            Complex cand = z - eval(z, dp) / dp;
            Complex dp2;
            double res2 = std::abs(eval(cand, dp2));
            if (!(res2 < 0.5 * res)) break;
            z = cand;
            res = res2;
        }
    }
}

struct Cluster {
    Complex center;
    int size = 0;
};

namespace detail {

/// p^(m)(c) / m! by m + 1 rounds of synthetic division.
template <class T>
Complex taylor_coefficient(std::span<const T> coeffs, Complex c, int m) {
    std::vector<Complex> q(coeffs.begin(), coeffs.end());
    Complex value(0.0);
    for (int round = 0; round <= m && !q.empty(); ++round) {
        Complex acc(0.0);
        std::vector<Complex> next(q.size() > 1 ? q.size() - 1 : 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            acc = acc * c + q[i];
            if (i > 0) next[i - 1] = acc;
        }
        value = acc;
        q = std::move(next);
    }
    return value;
}

/// Rounding level of p near c: deg * eps * sum |a_i| |c|^i.
template <class T>
double rounding_level(std::span<const T> coeffs, Complex c) {
    double s = 0.0, r = std::abs(c), pw = 1.0;
    for (const auto& a : coeffs) {
        s += std::abs(a) * pw;
        pw *= r;
    }
    return static_cast<double>(coeffs.size()) * std::numeric_limits<double>::epsilon() * s;
}

}  // namespace detail

/// Groups computed roots into clusters, one per distinct root.
///
/// Roots closer than tol are joined first. A root of multiplicity m is
/// scattered by about (delta / |t_m|)^(1/m), with delta the rounding level of
/// p and t_m = p^(m)(c)/m! at the true root c, so a group of nearby clusters
/// is merged when its spread around its centroid stays within four times that
/// radius. Distinct roots fail the test because p at their centroid is far
/// above the rounding level.
template <class T>
std::vector<Cluster> cluster_roots(const std::vector<Complex>& zs, double tol, std::span<const T> coeffs) {
    const std::size_t n = zs.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(zs[i] - zs[j]) < tol) parent[find(i)] = find(j);

    std::vector<std::vector<Complex>> groups;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(zs[i]);
    }
    auto centroid = [](const std::vector<Complex>& g) {
        Complex c(0.0);
        for (auto z : g) c += z;
        return c / static_cast<double>(g.size());
    };

    // Candidates farther apart than this are never one root.
    constexpr double reach = 0.5;
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
            const Complex seed = centroid(groups[i]);
            std::vector<std::pair<double, std::size_t>> near;
            for (std::size_t j = 0; j < groups.size(); ++j)
                if (j != i) {
                    double d = std::abs(centroid(groups[j]) - seed);
                    if (d < reach) near.push_back({d, j});
                }
            if (near.empty()) continue;
            std::sort(near.begin(), near.end());

            std::vector<Complex> pool = groups[i];
            std::size_t accepted = 0;
            for (std::size_t k = 0; k < near.size(); ++k) {
                const auto& g = groups[near[k].second];
                pool.insert(pool.end(), g.begin(), g.end());
                const Complex c = centroid(pool);
                double spread = 0.0;
                for (auto z : pool) spread = std::max(spread, std::abs(z - c));
                const int m = static_cast<int>(pool.size());
                const double level = detail::rounding_level(coeffs, c);
                // cheap screen: p nearly vanishes at the centroid of a split multiple root
                if (std::abs(detail::taylor_coefficient(coeffs, c, 0)) > 1e4 * level) continue;
                const double tm = std::abs(detail::taylor_coefficient(coeffs, c, m));
                if (tm == 0.0) continue;
                if (spread <= 4.0 * std::pow(level / tm, 1.0 / m)) accepted = k + 1;
            }
            if (accepted == 0) continue;
            std::vector<std::size_t> absorbed;
            for (std::size_t k = 0; k < accepted; ++k) absorbed.push_back(near[k].second);
            for (auto j : absorbed) groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
            std::sort(absorbed.rbegin(), absorbed.rend());
            for (auto j : absorbed) groups.erase(groups.begin() + static_cast<long>(j));
            merged = true;
        }
    }

    std::vector<Cluster> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back({centroid(g), static_cast<int>(g.size())});
    return out;
}

}  // namespace trigzero::roots

#pragma once

// Zeros in one period, counted with multiplicity.
//
// Exact route (cosine, sine): substitute t = cos x and count roots of the
// resulting rational polynomial on [-1, 1] with a Sturm chain. A root t0 in
// (-1, 1) of multiplicity m gives two x-zeros of multiplicity m; a root at
// t = +-1 of multiplicity m gives one x-zero of multiplicity 2m because
// cos x - (+-1) vanishes to second order there.
//
// Numeric route (any kind): count the unit-circle roots of the z = e^{ix} lift.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "trigzero/errors.hpp"
#include "trigzero/roots.hpp"
#include "trigzero/sturm.hpp"
#include "trigzero/trigpoly.hpp"

namespace trigzero {

enum class Certification { exact, numerical, lower_bound };

inline std::string to_string(Certification c) {
    switch (c) {
        case Certification::exact: return "exact";
        case Certification::numerical: return "numerical";
        case Certification::lower_bound: return "lower_bound";
    }
    return "?";
}

struct LocatedZero {
    double position = 0.0;  // in [0, 2pi)
    int multiplicity = 1;
    double residual = 0.0;  // ||z| - 1| for the numeric route, |f| at the point for the oracle
};

struct ZeroCount {
    int count = 0;
    Certification certification = Certification::exact;
    double tolerance = 0.0;  // numerical certification only
    bool degraded = false;   // some root sat in the ambiguous band [tol, 10 tol)
    std::vector<LocatedZero> zeros;
};

inline constexpr double default_tolerance = 1e-9;

struct Method {
    enum class Type { exact, numeric };
    Type type = Type::exact;
    double tol = default_tolerance;
    bool strict = true;  // raise NumericallyAmbiguous on a degraded count

    static Method exact() { return {Type::exact, default_tolerance, true}; }
    static Method numeric(double tol = default_tolerance, bool strict = true) { return {Type::numeric, tol, strict}; }
};

/// Z(C_a) for rational (or dyadic-lifted) coefficients.
inline ZeroCount count_cosine_exact(const CoeffVector& a) {
    if (a.is_zero()) throw IdenticallyZero();
    auto P = to_chebyshev(a).trimmed();
    auto r = sturm::roots_in_unit_interval(P.coeffs);
    return {2 * (r.open + r.at_plus_one + r.at_minus_one), Certification::exact, 0.0, false, {}};
}

/// Z(S_a) via S_a(x) = sin(x) Q(cos x). The forced zeros at x = 0 and x = pi
/// have multiplicity 1 + 2m when Q vanishes to order m at t = 1 or t = -1.
inline ZeroCount count_sine_exact(const CoeffVector& a) {
    if (a.sine_part_is_zero()) throw IdenticallyZero("sine polynomial is identically zero");
    auto Q = sine_factor(a).trimmed();
    auto r = sturm::roots_in_unit_interval(Q.coeffs);
    int z = 2 * r.open + (1 + 2 * r.at_plus_one) + (1 + 2 * r.at_minus_one);
    return {z, Certification::exact, 0.0, false, {}};
}

/// Unit-circle roots of p with multiplicity, from companion eigenvalues.
template <class T>
ZeroCount count_unit_circle(const AlgebraicPoly<T>& p, double tol = default_tolerance, bool strict = false) {
    if (p.is_zero()) throw IdenticallyZero();
    ZeroCount out;
    out.certification = Certification::numerical;
    out.tolerance = tol;
    if (p.degree() == 0) return out;

    auto trimmed = p.trimmed();
    std::span<const T> coeffs(trimmed.coeffs);
    auto clusters = roots::cluster_roots(roots::polynomial_roots(coeffs), tol, coeffs);
    // Newton only helps simple roots; it drags split multiple roots off-center.
    for (auto& c : clusters) {
        if (c.size != 1) continue;
        std::vector<roots::Complex> z{c.center};
        roots::polish(coeffs, z);
        c.center = z.front();
    }
    for (const auto& c : clusters) {
        const double off = std::abs(std::abs(c.center) - 1.0);
        if (off < tol) {
            out.count += c.size;
            double pos = std::arg(c.center);
            if (pos < 0) pos += 2.0 * std::numbers::pi;
            out.zeros.push_back({pos, c.size, off});
        } else if (off < 10.0 * tol) {
            out.degraded = true;
        }
    }
    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const LocatedZero& x, const LocatedZero& y) { return x.position < y.position; });
    if (out.degraded && strict)
        throw NumericallyAmbiguous("a root lies within " + std::to_string(10.0 * tol) +
                                   " of the unit circle but outside the tolerance " + std::to_string(tol));
    return out;
}

/// Dispatches on kind and method.
inline ZeroCount count_zeros(const TrigPoly& p, const Method& method = Method::exact()) {
    if (p.is_identically_zero()) throw IdenticallyZero();
    const bool exact = method.type == Method::Type::exact;
    switch (p.effective_kind()) {
        case Kind::cosine:
            if (exact) return count_cosine_exact(p.a);
            return count_unit_circle(lift_self_reciprocal(p.a), method.tol, method.strict);
        case Kind::sine:
            if (exact) return count_sine_exact(p.a);
            return count_unit_circle(lift_sine(p.a), method.tol, method.strict);
        case Kind::mixed:
            if (exact) throw UnsupportedExact("exact counting is not available for the mixed kind with finite X");
            return count_unit_circle(lift_phase(p.a, p.X), method.tol, method.strict);
    }
    throw Error("unknown polynomial kind");
}

/// Dense-grid zero finder, independent of both counting routes. Counts strict
/// sign crossings (bisected to 1e-12), grid points where f vanishes exactly,
/// and near-zero local extrema of |f| (taken as double zeros). The result is a
/// lower bound; for generic coefficients and grid_size >= 64 K it is the count.
inline ZeroCount brute_force_oracle(const TrigPoly& p, int grid_size) {
    if (p.is_identically_zero()) throw IdenticallyZero();
    const int K = std::max(p.a.K(), 1);
    if (grid_size < 16 * K) throw InvalidSpec("oracle grid must have at least 16 K points");

    const double two_pi = 2.0 * std::numbers::pi;
    const double scale = p.a.abs_sum() * (p.effective_kind() == Kind::mixed ? 1.0 + std::abs(p.X) : 1.0);
    const double touch_eps = 1e-9 * scale;
    const double slope_eps = 1e-9 * scale * K;
    const int n = grid_size;

    std::vector<double> theta(n), f(n), df(n);
    for (int i = 0; i < n; ++i) {
        theta[i] = two_pi * i / n;
        f[i] = eval(p, theta[i]);
        df[i] = eval_derivative(p, theta[i]);
    }
    auto sgn_of = [](double v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
    auto dsign = [](double v) { return v < 0 ? -1 : 1; };  // ties break upward

    ZeroCount out;
    out.certification = Certification::lower_bound;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const double lo = theta[i];
        const double hi = j == 0 ? two_pi : theta[j];
        if (f[i] == 0.0) {
            int m = std::abs(df[i]) > slope_eps ? 1 : 2;
            out.count += m;
            out.zeros.push_back({theta[i], m, 0.0});
            continue;
        }
        if (f[j] == 0.0) continue;
        if (sgn_of(f[i]) != sgn_of(f[j])) {
            double a = lo, b = hi, fa = f[i];
            while (b - a > 1e-12) {
                double mid = 0.5 * (a + b);
                double fm = eval(p, mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (sgn_of(fm) == sgn_of(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            double x = 0.5 * (a + b);
            out.count += 1;
            out.zeros.push_back({x >= two_pi ? x - two_pi : x, 1, std::abs(eval(p, x))});
            continue;
        }
        // Same strict sign at both ends: look for an extremum of |f| in between.
        const int s = sgn_of(f[i]);
        if (!(dsign(df[i]) == -s && dsign(df[j]) == s)) continue;
        double a = lo, b = hi;
        for (int it = 0; it < 60 && b - a > 1e-14; ++it) {
            double mid = 0.5 * (a + b);
            if (dsign(eval_derivative(p, mid)) == -s)
                a = mid;
            else
                b = mid;
        }
        const double c = 0.5 * (a + b);
        const double fc = eval(p, c);
        if (sgn_of(fc) == -s) {
            out.count += 2;  // dips through zero: two simple crossings
            out.zeros.push_back({c, 2, std::abs(fc)});
        } else if (std::abs(fc) < touch_eps) {
            out.count += 2;
            out.zeros.push_back({c, 2, std::abs(fc)});
        }
    }
    return out;
}

}  // namespace trigzero

#pragma once

// Real trigonometric polynomials
//
//   cosine:    C_a(x) = sum_{k=0}^{K} a_k cos(kx)
//   sine:      S_a(x) = sum_{k=0}^{K} a_k sin(kx)
//   mixed(X):  F_{X,a}(x) = C_a(x) + X S_a(x),   mixed(inf) == sine
//
// together with their algebraic forms: the Chebyshev substitution t = cos x and
// the unit-circle lifts in z = e^{ix}.

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigzero/errors.hpp"
#include "trigzero/polynomial.hpp"
#include "trigzero/rational.hpp"

namespace trigzero {

/// Coefficients a_0..a_K with a declared upper index K = size() - 1.
///
/// K is never trimmed: (1, 0) and (1) are different vectors. Values parsed from
/// text keep their exact rational form; floating values are lifted to their
/// exact dyadic rational on demand.
class CoeffVector {
public:
    CoeffVector() = default;

    static CoeffVector from_doubles(std::vector<double> values) {
        check_nonempty(values.size());
        for (double v : values)
            if (!std::isfinite(v)) throw InvalidSpec("coefficients must be finite");
        CoeffVector out;
        out.values_ = std::move(values);
        return out;
    }

    static CoeffVector from_rationals(std::vector<Rational> exact) {
        check_nonempty(exact.size());
        CoeffVector out;
        out.values_.reserve(exact.size());
        for (const auto& q : exact) out.values_.push_back(q.get_d());
        out.exact_ = std::move(exact);
        return out;
    }

    /// Comma-separated integers, decimals or "p/q"; parsed exactly.
    static CoeffVector parse(std::string_view text) { return from_rationals(parse_rational_list(text)); }

    int K() const { return static_cast<int>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const { return values_; }

    /// True when the coefficients were given as exact rationals.
    bool has_exact() const { return !exact_.empty(); }

    /// Exact coefficients: the stored rationals or the dyadic lift of the doubles.
    std::vector<Rational> exact() const {
        if (has_exact()) return exact_;
        std::vector<Rational> out;
        out.reserve(values_.size());
        for (double v : values_) out.push_back(dyadic(v));
        return out;
    }

    /// Exact test against zero; no tolerance.
    bool is_zero() const {
        if (has_exact()) {
            for (const auto& q : exact_)
                if (sgn(q) != 0) return false;
            return true;
        }
        for (double v : values_)
            if (v != 0.0) return false;
        return true;
    }

    /// True when a_1..a_K all vanish (the sine content is zero).
    bool sine_part_is_zero() const {
        for (std::size_t k = 1; k < size(); ++k) {
            if (has_exact() ? sgn(exact_[k]) != 0 : values_[k] != 0.0) return false;
        }
        return true;
    }

    /// Largest k with a_k != 0, or -1.
    int degree() const {
        for (std::size_t k = size(); k-- > 0;)
            if (has_exact() ? sgn(exact_[k]) != 0 : values_[k] != 0.0) return static_cast<int>(k);
        return -1;
    }

    double abs_sum() const {
        double s = 0.0;
        for (double v : values_) s += std::abs(v);
        return s;
    }

    bool operator==(const CoeffVector& o) const {
        if (size() != o.size()) return false;
        if (has_exact() || o.has_exact()) return exact() == o.exact();
        return values_ == o.values_;
    }

    std::string to_string() const {
        std::string out;
        if (has_exact()) {
            for (std::size_t k = 0; k < size(); ++k) out += (k ? "," : "") + exact_[k].get_str();
        } else {
            char buf[40];
            for (std::size_t k = 0; k < size(); ++k) {
                std::snprintf(buf, sizeof buf, "%.17g", values_[k]);
                out += (k ? "," : "") + std::string(buf);
            }
        }
        return out;
    }

private:
    static void check_nonempty(std::size_t n) {
        if (n == 0) throw InvalidSpec("a coefficient vector needs at least one entry (K >= 0)");
    }

    std::vector<double> values_;
    std::vector<Rational> exact_;
};

/// (a_K, ..., a_0) with the same declared K.
inline CoeffVector reverse(const CoeffVector& a) {
    if (a.has_exact()) {
        auto e = a.exact();
        return CoeffVector::from_rationals({e.rbegin(), e.rend()});
    }
    auto v = a.values();
    return CoeffVector::from_doubles({v.rbegin(), v.rend()});
}

enum class Kind { cosine, sine, mixed };

inline std::string to_string(Kind k) {
    switch (k) {
        case Kind::cosine: return "cosine";
        case Kind::sine: return "sine";
        case Kind::mixed: return "mixed";
    }
    return "?";
}

struct TrigPoly {
    CoeffVector a;
    Kind kind = Kind::cosine;
    double X = 0.0;  // only meaningful for Kind::mixed; +-inf selects sine

    static TrigPoly cosine(CoeffVector a) { return {std::move(a), Kind::cosine, 0.0}; }
    static TrigPoly sine(CoeffVector a) { return {std::move(a), Kind::sine, 0.0}; }
    static TrigPoly mixed(CoeffVector a, double X) { return {std::move(a), Kind::mixed, X}; }

    /// mixed(inf) is the sine polynomial; everything else is unchanged.
    Kind effective_kind() const {
        if (kind == Kind::mixed && std::isinf(X)) return Kind::sine;
        return kind;
    }

    bool is_identically_zero() const {
        switch (effective_kind()) {
            case Kind::sine: return a.sine_part_is_zero();
            default: return a.is_zero();
        }
    }
};

/// Both partial sums sum a_k cos(kx) and sum a_k sin(kx).
struct CosSinSums {
    double cos_sum;
    double sin_sum;
};

/// Clenshaw recurrence with Reinsch's modification near x = 0 and x = pi,
/// where the plain three-term form loses accuracy.
inline CosSinSums cos_sin_sums(std::span<const double> a, double x) {
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double h = std::sin(0.5 * x);
    const double g = std::cos(0.5 * x);
    double b1 = 0.0;  // b_{k+1}
    double d1 = 0.0;  // d_{k+1}
    double u;
    if (c >= 0.0) {
        // d_k = b_k - b_{k+1}
        u = -4.0 * h * h;
        for (std::size_t k = a.size(); k-- > 0;) {
            double d = a[k] + u * b1 + d1;
            if (k == 0) return {d - 0.5 * u * b1, s * b1};
            b1 = d + b1;
            d1 = d;
        }
    } else {
        // d_k = b_k + b_{k+1}
        u = 4.0 * g * g;
        for (std::size_t k = a.size(); k-- > 0;) {
            double d = a[k] + u * b1 - d1;
            if (k == 0) return {d - 0.5 * u * b1, s * b1};
            b1 = d - b1;
            d1 = d;
        }
    }
    return {0.0, 0.0};
}

inline double eval(const TrigPoly& p, double x) {
    auto sums = cos_sin_sums(p.a.values(), x);
    switch (p.effective_kind()) {
        case Kind::cosine: return sums.cos_sum;
        case Kind::sine: return sums.sin_sum;
        case Kind::mixed: return sums.cos_sum + p.X * sums.sin_sum;
    }
    return 0.0;
}

/// x-derivative, used by the brute-force oracle.
inline double eval_derivative(const TrigPoly& p, double x) {
    std::vector<double> ka(p.a.size());
    for (std::size_t k = 0; k < ka.size(); ++k) ka[k] = static_cast<double>(k) * p.a[k];
    auto sums = cos_sin_sums(ka, x);
    // d/dx cos(kx) = -k sin(kx), d/dx sin(kx) = k cos(kx)
    switch (p.effective_kind()) {
        case Kind::cosine: return -sums.sin_sum;
        case Kind::sine: return sums.cos_sum;
        case Kind::mixed: return -sums.sin_sum + p.X * sums.cos_sum;
    }
    return 0.0;
}

/// Exact value at x = quarter * pi/2 (quarter taken mod 4) for rational
/// coefficients. For mixed kind X is taken as its exact dyadic value.
inline Rational eval_exact_quarter(const TrigPoly& p, int quarter) {
    static constexpr int cos_table[4] = {1, 0, -1, 0};
    static constexpr int sin_table[4] = {0, 1, 0, -1};
    const auto a = p.a.exact();
    const int q = ((quarter % 4) + 4) % 4;
    Rational c_sum = 0, s_sum = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const int phase = static_cast<int>((static_cast<long long>(k) * q) % 4);
        c_sum += cos_table[phase] * a[k];
        s_sum += sin_table[phase] * a[k];
    }
    switch (p.effective_kind()) {
        case Kind::cosine: return c_sum;
        case Kind::sine: return s_sum;
        case Kind::mixed: return Rational(c_sum + dyadic(p.X) * s_sum);
    }
    return 0;
}

/// P with P(cos x) = sum a_k cos(kx), via T_{k+1} = 2t T_k - T_{k-1}.
/// The result keeps length K+1.
template <class T>
AlgebraicPoly<T> to_chebyshev(std::span<const T> a) {
    const std::size_t n = a.size();
    std::vector<T> out(n, T(0));
    std::vector<T> prev(n, T(0)), cur(n, T(0)), next(n, T(0));
    prev[0] = T(1);  // T_0
    if (n > 1) cur[1] = T(1);  // T_1
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<T>& basis = k == 0 ? prev : cur;
        if (a[k] != T(0))
            for (std::size_t i = 0; i <= k; ++i) out[i] += a[k] * basis[i];
        if (k >= 1 && k + 1 < n) {
            next[0] = -prev[0];
            for (std::size_t i = 1; i <= k + 1; ++i) next[i] = T(2) * cur[i - 1] - prev[i];
            std::swap(prev, cur);
            std::swap(cur, next);
        }
    }
    return AlgebraicPoly<T>(std::move(out), Basis::monomial_t);
}

inline AlgebraicPoly<Rational> to_chebyshev(const CoeffVector& a) {
    auto e = a.exact();
    return to_chebyshev<Rational>(std::span<const Rational>(e));
}

/// Q with sin(x) Q(cos x) = sum a_k sin(kx), Q = sum_{k>=1} a_k U_{k-1}.
/// The result has length max(K, 1).
template <class T>
AlgebraicPoly<T> sine_factor(std::span<const T> a) {
    const std::size_t n = a.size() <= 1 ? 1 : a.size() - 1;
    std::vector<T> out(n, T(0));
    std::vector<T> prev(n + 1, T(0)), cur(n + 1, T(0)), next(n + 1, T(0));
    cur[0] = T(1);  // U_0
    for (std::size_t k = 1; k < a.size(); ++k) {
        // cur holds U_{k-1}
        if (a[k] != T(0))
            for (std::size_t i = 0; i < k; ++i) out[i] += a[k] * cur[i];
        if (k + 1 < a.size()) {
            next[0] = -prev[0];
            for (std::size_t i = 1; i <= k; ++i) next[i] = T(2) * cur[i - 1] - prev[i];
            std::swap(prev, cur);
            std::swap(cur, next);
        }
    }
    return AlgebraicPoly<T>(std::move(out), Basis::monomial_t);
}

inline AlgebraicPoly<Rational> sine_factor(const CoeffVector& a) {
    auto e = a.exact();
    return sine_factor<Rational>(std::span<const Rational>(e));
}

/// q(z) = sum a_k (z^{K+k} + z^{K-k}), so q(e^{ix}) = 2 e^{iKx} C_a(x).
///
/// q is self-reciprocal of degree <= 2K. It equals z^K h(z) where
/// h(z) = z^K f(1/z) + z^{-K} f(z) is built from the reversed vector, so the
/// same routine applied to reverse(a) yields the lift whose circle values are
/// h evaluated for a.
template <class T>
AlgebraicPoly<T> lift_self_reciprocal(std::span<const T> a) {
    const std::size_t K = a.size() - 1;
    std::vector<T> q(2 * K + 1, T(0));
    for (std::size_t k = 0; k <= K; ++k) {
        q[K + k] += a[k];
        q[K - k] += a[k];
    }
    return AlgebraicPoly<T>(std::move(q), Basis::monomial_z);
}

inline AlgebraicPoly<double> lift_self_reciprocal(const CoeffVector& a) {
    return lift_self_reciprocal<double>(a.values());
}

/// s(z) = sum a_k (z^{K+k} - z^{K-k}), so s(e^{ix}) = 2i e^{iKx} S_a(x).
template <class T>
AlgebraicPoly<T> lift_sine(std::span<const T> a) {
    const std::size_t K = a.size() - 1;
    std::vector<T> q(2 * K + 1, T(0));
    for (std::size_t k = 1; k <= K; ++k) {
        q[K + k] += a[k];
        q[K - k] -= a[k];
    }
    return AlgebraicPoly<T>(std::move(q), Basis::monomial_z);
}

inline AlgebraicPoly<double> lift_sine(const CoeffVector& a) { return lift_sine<double>(a.values()); }

/// r(z) = sum a_k [(1 - iX) z^{K+k} + (1 + iX) z^{K-k}], so
/// r(e^{ix}) = 2 e^{iKx} F_{X,a}(x). X must be finite.
inline AlgebraicPoly<std::complex<double>> lift_phase(const CoeffVector& a, double X) {
    if (!std::isfinite(X)) throw InvalidSpec("lift_phase needs a finite X; use the sine lift for X = inf");
    using C = std::complex<double>;
    const std::size_t K = a.size() - 1;
    const C up(1.0, -X), down(1.0, X);
    std::vector<C> r(2 * K + 1, C(0.0));
    for (std::size_t k = 0; k <= K; ++k) {
        r[K + k] += up * a[k];
        r[K - k] += down * a[k];
    }
    return AlgebraicPoly<C>(std::move(r), Basis::monomial_z);
}

}  // namespace trigzero

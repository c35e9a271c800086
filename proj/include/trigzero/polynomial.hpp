#pragma once

// Dense univariate polynomials in the monomial basis, with the small amount of
// field arithmetic the exact zero counter needs (division, gcd, square-free
// decomposition).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trigzero {

/// Which variable a coefficient sequence is written in.
enum class Basis {
    monomial_t,   // powers of t = cos x
    chebyshev_t,  // Chebyshev T_k(t)
    monomial_z,   // powers of z = e^{ix}
};

/// Coefficients in increasing-power order, tagged with their basis.
///
/// Trailing zeros are kept as given so that a declared degree survives; call
/// trimmed() for the normalized form.
template <class T>
struct AlgebraicPoly {
    std::vector<T> coeffs;
    Basis basis = Basis::monomial_t;

    AlgebraicPoly() = default;
    explicit AlgebraicPoly(std::vector<T> c, Basis b = Basis::monomial_t) : coeffs(std::move(c)), basis(b) {}

    /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != T(0)) return static_cast<int>(i);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    bool is_trimmed() const { return coeffs.empty() || coeffs.back() != T(0); }

    AlgebraicPoly trimmed() const {
        AlgebraicPoly out = *this;
        out.coeffs.resize(static_cast<std::size_t>(degree() + 1));
        return out;
    }

    /// Horner evaluation; U may be wider than T (e.g. complex).
    template <class U>
    U operator()(const U& x) const {
        U acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + U(coeffs[i]);
        return acc;
    }

    bool operator==(const AlgebraicPoly& o) const { return basis == o.basis && coeffs == o.coeffs; }
};

namespace poly {

template <class T>
using Coeffs = std::vector<T>;

template <class T>
void trim(Coeffs<T>& p) {
    while (!p.empty() && p.back() == T(0)) p.pop_back();
}

template <class T>
int degree(const Coeffs<T>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != T(0)) return static_cast<int>(i);
    return -1;
}

template <class T>
T eval(const Coeffs<T>& p, const T& x) {
    T acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

template <class T>
Coeffs<T> derivative(const Coeffs<T>& p) {
    if (p.size() <= 1) return {};
    Coeffs<T> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * T(static_cast<long>(i));
    trim(d);
    return d;
}

/// Scales p so its leading coefficient is one. The zero polynomial is returned unchanged.
template <class T>
Coeffs<T> monic(Coeffs<T> p) {
    trim(p);
    if (p.empty()) return p;
    T lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

/// Quotient and remainder over a field.
template <class T>
std::pair<Coeffs<T>, Coeffs<T>> divmod(Coeffs<T> num, Coeffs<T> den) {
    trim(num);
    trim(den);
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    if (num.size() < den.size()) return {Coeffs<T>{}, num};
    Coeffs<T> q(num.size() - den.size() + 1, T(0));
    const T& lead = den.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        T factor = num[i + den.size() - 1] / lead;
        q[i] = factor;
        if (factor == T(0)) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= factor * den[j];
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(q);
    return {q, num};
}

template <class T>
Coeffs<T> rem(const Coeffs<T>& num, const Coeffs<T>& den) {
    return divmod(num, den).second;
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class T>
Coeffs<T> gcd(Coeffs<T> a, Coeffs<T> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs<T> r = rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

/// Quotient of a division known to be exact.
template <class T>
Coeffs<T> exact_div(const Coeffs<T>& num, const Coeffs<T>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.empty()) throw std::logic_error("polynomial division was not exact");
    return q;
}

/// Yun's square-free decomposition: p = c * prod_i factors[i]^(i+1), each
/// factor monic and square-free, pairwise coprime. Constant factors are kept
/// as empty-degree placeholders {1} so the index still encodes multiplicity.
template <class T>
std::vector<Coeffs<T>> squarefree_decomposition(Coeffs<T> p) {
    trim(p);
    std::vector<Coeffs<T>> factors;
    if (degree(p) <= 0) return factors;
    Coeffs<T> dp = derivative(p);
    Coeffs<T> a = gcd(p, dp);
    Coeffs<T> b = exact_div(p, a);
    Coeffs<T> c = exact_div(dp, a);
    Coeffs<T> d = c;
    {
        Coeffs<T> db = derivative(b);
        for (std::size_t i = 0; i < d.size() || i < db.size(); ++i) {
            if (i >= d.size()) d.resize(i + 1, T(0));
            if (i < db.size()) d[i] -= db[i];
        }
        trim(d);
    }
    while (degree(b) > 0) {
        Coeffs<T> f = gcd(b, d);
        factors.push_back(f);
        b = exact_div(b, f);
        c = exact_div(d, f);
        Coeffs<T> db = derivative(b);
        d = c;
        for (std::size_t i = 0; i < d.size() || i < db.size(); ++i) {
            if (i >= d.size()) d.resize(i + 1, T(0));
            if (i < db.size()) d[i] -= db[i];
        }
        trim(d);
    }
    return factors;
}

}  // namespace poly
}  // namespace trigzero

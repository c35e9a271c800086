#pragma once

// Exact real-root counting on an interval for rational polynomials.

#include <vector>

#include "trigzero/polynomial.hpp"
#include "trigzero/rational.hpp"

namespace trigzero::sturm {

using RatPoly = std::vector<Rational>;

/// Sturm chain p, p', -rem(...), ... . Each member is scaled by a positive
/// constant (1/|lead|), which leaves every sign pattern unchanged.
inline std::vector<RatPoly> sturm_chain(RatPoly p) {
    poly::trim(p);
    std::vector<RatPoly> chain;
    auto normalize = [](RatPoly q) {
        if (q.empty()) return q;
        Rational lead = abs(q.back());
        for (auto& c : q) c /= lead;
        return q;
    };
    chain.push_back(normalize(p));
    RatPoly d = poly::derivative(p);
    if (d.empty()) return chain;
    chain.push_back(normalize(std::move(d)));
    while (true) {
        RatPoly r = poly::rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(normalize(std::move(r)));
    }
    return chain;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = sgn(poly::eval(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Number of distinct roots in (lo, hi). Requires p(lo) != 0 and p(hi) != 0.
inline int distinct_roots_open(const RatPoly& p, const Rational& lo, const Rational& hi) {
    if (poly::degree(p) <= 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

/// Multiplicity of r as a root of p; p is replaced by p / (t - r)^m.
inline int strip_root(RatPoly& p, const Rational& r) {
    poly::trim(p);
    int m = 0;
    while (poly::degree(p) >= 1 && sgn(poly::eval(p, r)) == 0) {
        // synthetic division by (t - r)
        RatPoly q(p.size() - 1);
        Rational carry = 0;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = std::move(q);
        ++m;
    }
    return m;
}

/// Root multiplicities of P on [-1, 1]: roots strictly inside (counted with
/// multiplicity) and the multiplicities at t = +1 and t = -1.
struct IntervalRoots {
    int open = 0;
    int at_plus_one = 0;
    int at_minus_one = 0;
};

inline IntervalRoots roots_in_unit_interval(RatPoly p) {
    poly::trim(p);
    IntervalRoots out;
    const Rational one(1), minus_one(-1);
    out.at_plus_one = strip_root(p, one);
    out.at_minus_one = strip_root(p, minus_one);
    if (poly::degree(p) <= 0) return out;
    auto factors = poly::squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        int distinct = distinct_roots_open(factors[i], minus_one, one);
        out.open += static_cast<int>(i + 1) * distinct;
    }
    return out;
}

}  // namespace trigzero::sturm

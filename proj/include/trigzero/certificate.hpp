#pragma once

// Sign-change certificate for the reversal inequality Z(C_a) + Z(C_rev(a)) >= 2K.
//
// Let f(z) = sum a_k z^k and h(z) = z^K f(1/z) + z^{-K} f(z). On the circle
// h(e^{i theta}) = 2 C_rev(a)(theta), while on the 2K-th roots of unity
// theta_j = pi j / K it equals 2 (-1)^j C_a(theta_j). Sign changes of the grid
// values therefore bound Z(C_rev(a)) from below, and every adjacent pair is a
// sign change of either the plain or the alternated sequence.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "trigzero/errors.hpp"
#include "trigzero/trigpoly.hpp"
#include "trigzero/zerocount.hpp"

namespace trigzero {

struct GridValues {
    int K = 0;
    std::vector<double> theta;    // theta_j = pi j / K, j = 0..2K
    std::vector<double> samples;  // C_a(theta_j)
    std::vector<double> lambda;   // h(e^{i theta_j}) = 2 (-1)^j C_a(theta_j)
    std::vector<bool> exact;      // sample computed in exact arithmetic
    bool near_zero_warning = false;  // a floating sample below 1e-12 sum|a_k|, kept with its floating sign
};

inline GridValues grid_values(const CoeffVector& a) {
    const int K = a.K();
    if (K < 1) throw InvalidSpec("the sign-change grid needs K >= 1");
    GridValues g;
    g.K = K;
    const auto poly = TrigPoly::cosine(a);
    const double guard = 1e-12 * a.abs_sum();
    for (int j = 0; j <= 2 * K; ++j) {
        const double theta = std::numbers::pi * j / K;
        double c;
        bool exact = false;
        if ((2 * j) % K == 0) {
            // theta_j is a multiple of pi/2; cos(k theta_j) is 0 or +-1
            c = eval_exact_quarter(poly, 2 * j / K).get_d();
            exact = true;
        } else {
            c = eval(poly, theta);
            if (std::abs(c) < guard) g.near_zero_warning = true;
        }
        g.theta.push_back(theta);
        g.samples.push_back(c);
        g.lambda.push_back(2.0 * (j % 2 == 0 ? c : -c));
        g.exact.push_back(exact);
    }
    return g;
}

/// Adjacent pairs with v_j v_{j+1} <= 0; a zero sample counts on both sides.
template <class T>
int paper_sign_changes(std::span<const T> v) {
    if (v.size() < 2) throw InvalidSpec("sign changes need at least two samples");
    int n = 0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] * v[j + 1] <= T(0)) ++n;
    return n;
}

inline int paper_sign_changes(const std::vector<double>& v) { return paper_sign_changes<double>(std::span<const double>(v)); }

/// Lower bound on the zeros (with multiplicity) of any continuous function
/// sampled at v on an ordered grid. Each zero sample at index >= 1 counts
/// once. Consecutive nonzero samples of opposite sign add one crossing. A run
/// of zeros between opposite-sign samples already contains its crossing, so
/// the alternation across the run adds nothing.
template <class T>
int robust_sign_changes(std::span<const T> v) {
    if (v.size() < 2) throw InvalidSpec("sign changes need at least two samples");
    int count = 0;
    int last_sign = 0;
    bool zero_since_last = false;
    bool any_nonzero = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const int s = v[j] > T(0) ? 1 : (v[j] < T(0) ? -1 : 0);
        if (s == 0) {
            if (j >= 1) ++count;
            zero_since_last = true;
            continue;
        }
        any_nonzero = true;
        if (last_sign != 0 && s != last_sign && !zero_since_last) ++count;
        last_sign = s;
        zero_since_last = false;
    }
    if (!any_nonzero) throw AllZero();
    return count;
}

inline int robust_sign_changes(const std::vector<double>& v) { return robust_sign_changes<double>(std::span<const double>(v)); }

/// (-1)^j v_j
template <class T>
std::vector<T> alternate(std::span<const T> v) {
    std::vector<T> out(v.begin(), v.end());
    for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
    return out;
}

/// Checks paper_sign_changes(v) + paper_sign_changes(alt v) = (len - 1) + #{adjacent pairs with product 0}.
template <class T>
bool alternation_identity_holds(std::span<const T> v) {
    auto alt = alternate(v);
    int zero_pairs = 0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] * v[j + 1] == T(0)) ++zero_pairs;
    const int lhs = paper_sign_changes(v) + paper_sign_changes(std::span<const T>(alt));
    return lhs == static_cast<int>(v.size()) - 1 + zero_pairs;
}

struct PairBound {
    int lb_forward = 0;  // <= Z(C_a)
    int lb_reverse = 0;  // <= Z(C_rev(a))
};

inline PairBound certified_pair_bound(const CoeffVector& a) {
    if (a.is_zero()) throw IdenticallyZero();
    auto g = grid_values(a);
    return {robust_sign_changes(g.samples), robust_sign_changes(g.lambda)};
}

/// Outcome of checking Z(F_a) + Z(F_rev(a)) >= 2K for one vector.
struct PairReport {
    int z_forward = -1;
    int z_reverse = -1;
    int sum = -1;
    int bound = 0;
    bool holds = false;
    bool degenerate_forward = false;  // F_a is identically zero
    bool degenerate_reverse = false;  // F_rev(a) is identically zero
    bool degenerate() const { return degenerate_forward || degenerate_reverse; }
};

namespace detail {

inline PairReport pair_report(const TrigPoly& forward, const TrigPoly& reversed, const Method& method) {
    PairReport r;
    r.bound = 2 * forward.a.K();
    r.degenerate_forward = forward.is_identically_zero();
    r.degenerate_reverse = reversed.is_identically_zero();
    if (r.degenerate_forward && r.degenerate_reverse) throw IdenticallyZero();
    if (!r.degenerate_forward) r.z_forward = count_zeros(forward, method).count;
    if (!r.degenerate_reverse) r.z_reverse = count_zeros(reversed, method).count;
    if (!r.degenerate()) {
        r.sum = r.z_forward + r.z_reverse;
        r.holds = r.sum >= r.bound;
    }
    return r;
}

}  // namespace detail

/// Z(C_a) + Z(C_rev(a)) >= 2K for a cosine coefficient vector.
inline PairReport verify_proposition(const CoeffVector& a, const Method& method = Method::exact()) {
    if (a.is_zero()) throw IdenticallyZero();
    return detail::pair_report(TrigPoly::cosine(a), TrigPoly::cosine(reverse(a)), method);
}

/// Z(F_{X,a}) + Z(F_{X,rev(a)}) >= 2K. Finite X is counted numerically; X = inf
/// is the sine polynomial and uses the exact sine counter. When one side is
/// identically zero the report is flagged degenerate and holds stays false.
inline PairReport verify_general(const CoeffVector& a, double X, double tol = default_tolerance) {
    if (a.is_zero()) throw IdenticallyZero();
    const Method method = std::isinf(X) ? Method::exact() : Method::numeric(tol);
    return detail::pair_report(TrigPoly::mixed(a, X), TrigPoly::mixed(reverse(a), X), method);
}

}  // namespace trigzero

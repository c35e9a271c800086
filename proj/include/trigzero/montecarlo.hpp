#pragma once

// Monte Carlo estimates of E[Z(C_a)] over random coefficient ensembles.
//
// Draw i of an experiment with seed s is generated from its own counter-based
// stream keyed on (s, i). Workers only partition draw indices, so every
// summary is identical for any number of threads.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "trigzero/certificate.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/trigpoly.hpp"
#include "trigzero/zerocount.hpp"

namespace trigzero {

// ---------------------------------------------------------------------------
// Random streams

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 generator; satisfies UniformRandomBitGenerator.
class StreamEngine {
public:
    using result_type = std::uint64_t;

    StreamEngine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : state_(mix64(mix64(mix64(seed) ^ stream) ^ index)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_ - 0x9e3779b97f4a7c15ULL);
    }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Distributions

namespace dist {
struct Gaussian { double mu = 0.0, sigma = 1.0; };
struct Uniform { double lo = 0.0, hi = 1.0; };
struct Rademacher {};
struct Bernoulli01 { double p = 0.5; };
struct PointMass { double c = 0.0; };
struct Cauchy { double loc = 0.0, scale = 1.0; };
}  // namespace dist

/// Law of a single coefficient.
class Distribution {
public:
    using Variant = std::variant<dist::Gaussian, dist::Uniform, dist::Rademacher, dist::Bernoulli01,
                                 dist::PointMass, dist::Cauchy>;

    Distribution() : v_(dist::Gaussian{}) {}
    template <class D, class = std::enable_if_t<std::is_constructible_v<Variant, D>>>
    Distribution(D d) : v_(d) {
        validate();
    }

    static Distribution gaussian(double mu, double sigma) { return dist::Gaussian{mu, sigma}; }
    static Distribution uniform(double lo, double hi) { return dist::Uniform{lo, hi}; }
    static Distribution rademacher() { return dist::Rademacher{}; }
    static Distribution bernoulli01(double p) { return dist::Bernoulli01{p}; }
    static Distribution point_mass(double c) { return dist::PointMass{c}; }
    static Distribution cauchy(double loc, double scale) { return dist::Cauchy{loc, scale}; }

    const Variant& variant() const { return v_; }

    void validate() const {
        std::visit(
            [](const auto& d) {
                using D = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<D, dist::Gaussian>) {
                    if (!(d.sigma > 0) || !std::isfinite(d.mu) || !std::isfinite(d.sigma))
                        throw InvalidSpec("gaussian needs finite mu and sigma > 0");
                } else if constexpr (std::is_same_v<D, dist::Uniform>) {
                    if (!(d.lo < d.hi) || !std::isfinite(d.lo) || !std::isfinite(d.hi))
                        throw InvalidSpec("uniform needs finite lo < hi");
                } else if constexpr (std::is_same_v<D, dist::Bernoulli01>) {
                    if (!(d.p >= 0.0 && d.p <= 1.0)) throw InvalidSpec("bernoulli01 needs 0 <= p <= 1");
                } else if constexpr (std::is_same_v<D, dist::PointMass>) {
                    if (!std::isfinite(d.c)) throw InvalidSpec("point_mass needs a finite value");
                } else if constexpr (std::is_same_v<D, dist::Cauchy>) {
                    if (!(d.scale > 0) || !std::isfinite(d.loc) || !std::isfinite(d.scale))
                        throw InvalidSpec("cauchy needs finite loc and scale > 0");
                }
            },
            v_);
    }

    template <class Engine>
    double draw(Engine& eng) const {
        return std::visit(
            [&](const auto& d) -> double {
                using D = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<D, dist::Gaussian>) {
                    return std::normal_distribution<double>(d.mu, d.sigma)(eng);
                } else if constexpr (std::is_same_v<D, dist::Uniform>) {
                    return std::uniform_real_distribution<double>(d.lo, d.hi)(eng);
                } else if constexpr (std::is_same_v<D, dist::Rademacher>) {
                    return std::bernoulli_distribution(0.5)(eng) ? 1.0 : -1.0;
                } else if constexpr (std::is_same_v<D, dist::Bernoulli01>) {
                    return std::bernoulli_distribution(d.p)(eng) ? 1.0 : 0.0;
                } else if constexpr (std::is_same_v<D, dist::PointMass>) {
                    return d.c;
                } else {
                    return std::cauchy_distribution<double>(d.loc, d.scale)(eng);
                }
            },
            v_);
    }

    /// Atoms only (no continuous part).
    bool is_discrete() const {
        return std::holds_alternative<dist::Rademacher>(v_) || std::holds_alternative<dist::Bernoulli01>(v_) ||
               std::holds_alternative<dist::PointMass>(v_);
    }

    /// Draws are zero with probability one.
    bool is_almost_surely_zero() const {
        if (auto* b = std::get_if<dist::Bernoulli01>(&v_)) return b->p == 0.0;
        if (auto* m = std::get_if<dist::PointMass>(&v_)) return m->c == 0.0;
        return false;
    }

    std::string name() const {
        static constexpr const char* names[] = {"gaussian", "uniform", "rademacher", "bernoulli01", "point_mass", "cauchy"};
        return names[v_.index()];
    }

    /// Compact description such as "gaussian(mu=0;sigma=1)", free of commas for CSV.
    std::string describe() const {
        std::ostringstream os;
        os.precision(17);
        std::visit(
            [&](const auto& d) {
                using D = std::decay_t<decltype(d)>;
                os << name() << "(";
                if constexpr (std::is_same_v<D, dist::Gaussian>) os << "mu=" << d.mu << ";sigma=" << d.sigma;
                else if constexpr (std::is_same_v<D, dist::Uniform>) os << "lo=" << d.lo << ";hi=" << d.hi;
                else if constexpr (std::is_same_v<D, dist::Bernoulli01>) os << "p=" << d.p;
                else if constexpr (std::is_same_v<D, dist::PointMass>) os << "c=" << d.c;
                else if constexpr (std::is_same_v<D, dist::Cauchy>) os << "loc=" << d.loc << ";scale=" << d.scale;
                os << ")";
            },
            v_);
        return os.str();
    }

private:
    Variant v_;
};

// ---------------------------------------------------------------------------
// Ensembles

/// Independent identically distributed coefficients on [L, M]; the rest are zero.
struct IidLayout {
    Distribution dist;
    int L = 0;
    int M = 0;
};

/// Coefficients j and K - j are drawn independently from halves[min(j, K - j)],
/// so (a_0..a_K) and (a_K..a_0) share one joint law.
struct PalindromicLayout {
    std::vector<Distribution> halves;
};

struct EnsembleSpec {
    int K = 0;
    std::variant<IidLayout, PalindromicLayout> layout;

    static EnsembleSpec iid(int K, Distribution d, int L, int M) { return {K, IidLayout{d, L, M}}; }
    static EnsembleSpec iid(int K, Distribution d) { return {K, IidLayout{d, 0, K}}; }
    static EnsembleSpec palindromic(int K, std::vector<Distribution> halves) {
        return {K, PalindromicLayout{std::move(halves)}};
    }

    static std::size_t half_count(int K) { return static_cast<std::size_t>(K + 2) / 2; }

    void validate() const {
        if (K < 0) throw InvalidSpec("K must be nonnegative");
        if (auto* iid = std::get_if<IidLayout>(&layout)) {
            if (!(0 <= iid->L && iid->L <= iid->M && iid->M <= K)) throw InvalidSpec("need 0 <= L <= M <= K");
            iid->dist.validate();
        } else {
            const auto& pal = std::get<PalindromicLayout>(layout);
            if (pal.halves.size() != half_count(K))
                throw InvalidSpec("palindromic layout needs ceil((K+1)/2) = " + std::to_string(half_count(K)) +
                                  " distributions");
            for (const auto& d : pal.halves) d.validate();
        }
    }

    /// Distribution of slot k, or nullptr for a pinned zero.
    const Distribution* slot(int k) const {
        if (auto* iid = std::get_if<IidLayout>(&layout)) {
            return (k >= iid->L && k <= iid->M) ? &iid->dist : nullptr;
        }
        const auto& pal = std::get<PalindromicLayout>(layout);
        return &pal.halves[static_cast<std::size_t>(std::min(k, K - k))];
    }

    bool is_discrete() const {
        for (int k = 0; k <= K; ++k)
            if (auto* d = slot(k); d && !d->is_discrete()) return false;
        return true;
    }

    bool is_almost_surely_zero() const {
        for (int k = 0; k <= K; ++k)
            if (auto* d = slot(k); d && !d->is_almost_surely_zero()) return false;
        return true;
    }

    int support_lo() const {
        if (auto* iid = std::get_if<IidLayout>(&layout)) return iid->L;
        return 0;
    }
    int support_hi() const {
        if (auto* iid = std::get_if<IidLayout>(&layout)) return iid->M;
        return K;
    }

    std::string describe() const {
        if (auto* iid = std::get_if<IidLayout>(&layout)) return iid->dist.describe();
        std::string out = "palindromic[";
        const auto& pal = std::get<PalindromicLayout>(layout);
        for (std::size_t i = 0; i < pal.halves.size(); ++i) out += (i ? " " : "") + pal.halves[i].describe();
        return out + "]";
    }
};

/// Draw number `index` of the stream keyed on `seed`.
inline CoeffVector draw(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t index) {
    StreamEngine eng(seed, 0, index);
    std::vector<double> a(static_cast<std::size_t>(spec.K + 1), 0.0);
    for (int k = 0; k <= spec.K; ++k)
        if (const Distribution* d = spec.slot(k)) a[static_cast<std::size_t>(k)] = d->draw(eng);
    return CoeffVector::from_doubles(std::move(a));
}

/// Draws first .. first + n - 1.
inline std::vector<CoeffVector> sample(const EnsembleSpec& spec, std::uint64_t seed, std::size_t n,
                                       std::uint64_t first = 0) {
    spec.validate();
    if (n < 1) throw InvalidSpec("need at least one draw");
    std::vector<CoeffVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(draw(spec, seed, first + i));
    return out;
}

// ---------------------------------------------------------------------------
// Estimation

enum class CountingChoice { automatic, exact, numeric };

struct ExperimentOptions {
    CountingChoice counting = CountingChoice::automatic;
    double tol = default_tolerance;
    unsigned threads = 0;  // 0: TRIGZERO_THREADS, else hardware concurrency
    bool check_pairs = true;
};

struct ExperimentSummary {
    std::uint64_t seed = 0;
    long n_requested = 0;
    long n_identically_zero = 0;
    long n_counted = 0;
    double mean_Z = 0.0;
    double stderr_Z = 0.0;
    long n_pair_violations = 0;
    long n_recounted_exact = 0;  // numerically ambiguous draws recounted on their dyadic lift
    std::string method;          // "exact" or "numeric"
    double wall_time = 0.0;      // seconds
    int K = 0;
    int L = 0;
    int M = 0;
    std::string dist;
};

/// Worker count from TRIGZERO_THREADS, else the machine's parallelism.
inline unsigned default_threads() {
    if (const char* env = std::getenv("TRIGZERO_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline bool uses_exact(const EnsembleSpec& spec, CountingChoice c) {
    switch (c) {
        case CountingChoice::exact: return true;
        case CountingChoice::numeric: return false;
        case CountingChoice::automatic: return spec.K <= 16 || spec.is_discrete();
    }
    return true;
}

namespace detail {

/// Cosine zero count; a numerically ambiguous instance falls back to the exact
/// counter on the dyadic lift instead of being dropped.
inline int count_cosine(const CoeffVector& a, bool exact, double tol, bool& recounted) {
    if (exact) return count_cosine_exact(a).count;
    try {
        return count_zeros(TrigPoly::cosine(a), Method::numeric(tol, true)).count;
    } catch (const NumericallyAmbiguous&) {
        recounted = true;
        return count_cosine_exact(a).count;
    }
}

}  // namespace detail

inline ExperimentSummary estimate_mean_zeros(const EnsembleSpec& spec, std::uint64_t seed, long n,
                                             const ExperimentOptions& opts = {}) {
    spec.validate();
    if (n < 1) throw InvalidSpec("need at least one draw");
    if (spec.is_almost_surely_zero()) throw AllDrawsZero("ensemble is almost surely identically zero");
    const auto start = std::chrono::steady_clock::now();
    const bool exact = uses_exact(spec, opts.counting);

    struct DrawResult {
        int z = -1;  // -1: identically zero draw
        bool violation = false;
        bool recounted = false;
    };
    std::vector<DrawResult> results(static_cast<std::size_t>(n));
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads ? opts.threads : default_threads(),
                                                             static_cast<unsigned>(n)));
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned w) {
        try {
            for (long i = w; i < n; i += workers) {
                CoeffVector a = draw(spec, seed, static_cast<std::uint64_t>(i));
                DrawResult& r = results[static_cast<std::size_t>(i)];
                if (a.is_zero()) continue;
                r.z = detail::count_cosine(a, exact, opts.tol, r.recounted);
                if (opts.check_pairs) {
                    int z_rev = detail::count_cosine(reverse(a), exact, opts.tol, r.recounted);
                    r.violation = r.z + z_rev < 2 * spec.K;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    ExperimentSummary s;
    s.seed = seed;
    s.n_requested = n;
    s.method = exact ? "exact" : "numeric";
    s.K = spec.K;
    s.L = spec.support_lo();
    s.M = spec.support_hi();
    s.dist = spec.describe();
    long long sum = 0, sum_sq = 0;
    for (const auto& r : results) {
        if (r.z < 0) {
            ++s.n_identically_zero;
            continue;
        }
        ++s.n_counted;
        sum += r.z;
        sum_sq += static_cast<long long>(r.z) * r.z;
        s.n_pair_violations += r.violation;
        s.n_recounted_exact += r.recounted;
    }
    if (s.n_counted == 0) throw AllDrawsZero();
    const auto cnt = static_cast<long double>(s.n_counted);
    s.mean_Z = static_cast<double>(static_cast<long double>(sum) / cnt);
    if (s.n_counted > 1) {
        // integer sums make the variance independent of summation order
        const long double var =
            (cnt * static_cast<long double>(sum_sq) - static_cast<long double>(sum) * sum) / (cnt * (cnt - 1));
        s.stderr_Z = static_cast<double>(std::sqrt(std::max<long double>(var, 0.0L)) / std::sqrt(cnt));
    }
    s.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

/// One summary per grid point, all with the same seed.
inline std::vector<ExperimentSummary> sweep(const std::vector<EnsembleSpec>& points, std::uint64_t seed, long n,
                                            const ExperimentOptions& opts = {}) {
    if (points.empty()) throw InvalidSpec("a sweep needs at least one grid point");
    std::vector<ExperimentSummary> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(estimate_mean_zeros(p, seed, n, opts));
    return out;
}

/// The family obtained by varying K. An iid layout with full support keeps
/// full support ([L, K]); otherwise [L, M] is kept and must fit. A palindromic
/// layout must use one distribution for every slot.
inline std::vector<EnsembleSpec> family_over_K(const EnsembleSpec& base, const std::vector<int>& Ks) {
    std::vector<EnsembleSpec> out;
    for (int K : Ks) {
        EnsembleSpec s = base;
        s.K = K;
        if (auto* iid = std::get_if<IidLayout>(&s.layout)) {
            if (std::get<IidLayout>(base.layout).M == base.K) iid->M = K;
        } else {
            const auto& halves = std::get<PalindromicLayout>(base.layout).halves;
            for (const auto& h : halves)
                if (h.describe() != halves.front().describe())
                    throw InvalidSpec("a K sweep of a palindromic layout needs identical halves");
            s.layout = PalindromicLayout{std::vector<Distribution>(EnsembleSpec::half_count(K), halves.front())};
        }
        s.validate();
        out.push_back(std::move(s));
    }
    return out;
}

/// The family obtained by varying p of a bernoulli01 iid layout.
inline std::vector<EnsembleSpec> family_over_p(const EnsembleSpec& base, const std::vector<double>& ps) {
    auto* iid = std::get_if<IidLayout>(&base.layout);
    if (!iid || !std::holds_alternative<dist::Bernoulli01>(iid->dist.variant()))
        throw InvalidSpec("a p sweep needs an iid bernoulli01 layout");
    std::vector<EnsembleSpec> out;
    for (double p : ps) {
        EnsembleSpec s = base;
        std::get<IidLayout>(s.layout).dist = Distribution::bernoulli01(p);
        s.validate();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace trigzero

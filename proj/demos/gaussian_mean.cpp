// Mean number of real zeros of sum a_k cos(kx) with standard normal a_k,
// compared with 2K/sqrt(3) and with the guaranteed lower bound K.
//
//   demo_gaussian_mean [n] [seed]

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "trigzero/trigzero.hpp"

int main(int argc, char** argv) {
    using namespace trigzero;
    const long n = argc > 1 ? std::atol(argv[1]) : 200;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    if (n < 2) {
        std::fprintf(stderr, "need at least two draws\n");
        return 1;
    }

    std::printf("%5s  %10s  %8s  %10s  %6s  %9s\n", "K", "mean Z", "stderr", "2K/sqrt3", "ratio", "violations");
    for (int K : {4, 8, 16, 32, 64}) {
        const auto s = estimate_mean_zeros(EnsembleSpec::iid(K, Distribution::gaussian(0, 1)), seed, n);
        const double target = 2.0 * K / std::sqrt(3.0);
        std::printf("%5d  %10.4f  %8.4f  %10.4f  %6.3f  %9ld\n", K, s.mean_Z, s.stderr_Z, target, s.mean_Z / target,
                    s.n_pair_violations);
    }
    return 0;
}

// Counts the zeros of a cosine polynomial and of its coefficient reversal,
// then prints the sign-change certificate for the pair.
//
//   demo_reversal 1,2,3,4,5

#include <cstdio>
#include <iostream>

#include "trigzero/trigzero.hpp"

int main(int argc, char** argv) {
    using namespace trigzero;
    try {
        const CoeffVector a = CoeffVector::parse(argc > 1 ? argv[1] : "1,2,3,4,5");
        const CoeffVector r = reverse(a);
        const PairReport report = verify_proposition(a);

        std::cout << "a      = (" << a.to_string() << ")\n";
        std::cout << "rev(a) = (" << r.to_string() << ")\n";
        std::cout << "Z(C_a) = " << report.z_forward << ", Z(C_rev) = " << report.z_reverse << ", sum = " << report.sum
                  << ", 2K = " << report.bound << (report.holds ? "  ok\n" : "  VIOLATED\n");

        if (a.K() >= 1) {
            const GridValues g = grid_values(a);
            std::cout << "\n   j   theta_j        C_a(theta_j)    lambda_j\n";
            for (std::size_t j = 0; j < g.theta.size(); ++j)
                std::printf("%4zu   %-13.6f  % -14.6g  % -14.6g\n", j, g.theta[j], g.samples[j], g.lambda[j]);
            const PairBound b = certified_pair_bound(a);
            std::cout << "\ncertified: Z(C_a) >= " << b.lb_forward << ", Z(C_rev) >= " << b.lb_reverse << "\n";
        }
        return report.holds ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

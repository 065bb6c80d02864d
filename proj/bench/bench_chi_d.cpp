// Times the serial reference kernels against the OpenMP ones.
//
//   cypairs_bench [max_components] [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include <cyp/parallel.hpp>
#include <cyp/sncpair.hpp>
#include <cyp/symcalc.hpp>

using namespace cyp;

namespace
{

// Every subset is a nonempty stratum.
snc::SncPair dense_pair(int l, std::mt19937_64 &rng)
{
    snc::SncPair p;
    p.d = 3;
    std::uniform_int_distribution<std::int64_t> mult(1, 40);
    std::uniform_int_distribution<std::int64_t> chi(-50, 50);
    for (int j = 0; j < l; ++j) {
        p.ids.push_back("D" + std::to_string(j + 1));
        p.mults.push_back(j % 2 ? mult(rng) : -mult(rng) - 3);
    }
    p.strata.num_components = l;
    for (snc::Subset s = 0; s < (snc::Subset{1} << l); ++s) {
        p.strata.entries[s] = {chi(rng), std::nullopt};
    }
    return p;
}

template <class F>
double time_ms(int repeats, F &&f)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) {
        f();
    }
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

} // namespace

int main(int argc, char **argv)
{
    const int max_l = argc > 1 ? std::atoi(argv[1]) : 16;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    const int threads = configure_threads();
    std::cout << "threads: " << threads << "\n\n";

    std::cout << std::setw(4) << "l" << std::setw(10) << "strata" << std::setw(14) << "serial ms" << std::setw(14)
              << "parallel ms" << std::setw(10) << "speedup" << "  agree\n";
    std::mt19937_64 rng(1);
    for (int l = 8; l <= max_l; l += 2) {
        const snc::SncPair p = dense_pair(l, rng);
        Rational a;
        Rational b;
        const double ts = time_ms(repeats, [&] { a = snc::serial::chi_d(p); });
        const double tp = time_ms(repeats, [&] { b = snc::chi_d(p); });
        std::cout << std::setw(4) << l << std::setw(10) << p.strata.entries.size() << std::setw(14) << std::fixed
                  << std::setprecision(2) << ts << std::setw(14) << tp << std::setw(10) << ts / tp << "  "
                  << (a == b ? "yes" : "NO") << "\n";
    }

    // Identity suite: one m at a time versus all m concurrently.
    const int max_m = 7;
    const double ts = time_ms(1, [&] {
        for (int m = 1; m <= max_m; ++m) {
            sym::verify_todd_identities(m);
            sym::verify_todd_prime_identities(m);
        }
    });
    const double tp = time_ms(1, [&] {
        parallel_for(max_m, [](std::int64_t i) {
            sym::verify_todd_identities(static_cast<int>(i) + 1);
            sym::verify_todd_prime_identities(static_cast<int>(i) + 1);
        });
    });
    std::cout << "\nidentities m=1.." << max_m << ": serial " << ts << " ms, parallel " << tp << " ms\n";
    return 0;
}

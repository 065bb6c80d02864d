#include <cyp/parallel.hpp>

#include <cstdlib>
#include <string>

namespace cyp
{

int configure_threads()
{
    if (const char *cap = std::getenv(thread_cap_env)) {
        try {
            const int n = std::stoi(cap);
            if (n > 0) {
                omp_set_num_threads(n);
            }
        } catch (const std::exception &) {
            // Unparseable cap: keep the OpenMP default.
        }
    }
    return omp_get_max_threads();
}

} // namespace cyp

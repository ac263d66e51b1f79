#include "rreg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rreg {

unsigned worker_threads() {
    if (const char* env = std::getenv("RREG_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
            // fall through to the hardware count
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace rreg

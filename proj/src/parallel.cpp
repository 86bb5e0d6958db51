#include "fewears/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fewears {

int default_thread_count() {
    if (const char* env = std::getenv("FEWEARS_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace fewears

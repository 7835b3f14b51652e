#include "eip/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace eip {

int worker_count() {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace eip

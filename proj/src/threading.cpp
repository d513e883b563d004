#include "collabnet/threading.hpp"

#include <cstdlib>
#include <string>

#include "collabnet/errors.hpp"

namespace collabnet {

int thread_budget() {
    const char* env = std::getenv("COLLABNET_THREADS");
    long value = 0;
    if (env && *env) {
        char* end = nullptr;
        value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 0)
            throw DataError(std::string("COLLABNET_THREADS must be a non-negative integer, got '") +
                            env + "'");
    }
    const long hardware = static_cast<long>(std::thread::hardware_concurrency());
    if (value == 0) value = hardware;
    // more workers than logical cores only adds scheduling overhead
    if (hardware > 0 && value > hardware) value = hardware;
    if (value < 1) value = 1;
    return static_cast<int>(value);
}

}  // namespace collabnet

#include "twocycle/caps.hpp"

#include <cstdlib>

namespace twocycle {

CapConfig CapConfig::from_environment() {
    CapConfig cfg;
    if (const char* s = std::getenv("TWOCYCLE_CAP_SECONDS")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0) cfg.max_seconds = v;
    }
    return cfg;
}

CapConfig& default_caps() {
    static CapConfig cfg = CapConfig::from_environment();
    return cfg;
}

}  // namespace twocycle

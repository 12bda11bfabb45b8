#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace twocycle {

// Hard limits for the exhaustive enumerators. A search that would exceed its
// cap throws CapExceeded instead of returning a silently truncated result, so
// a verdict downstream is either exact or explicitly "inconclusive".
struct CapConfig {
    long long max_items = 2'000'000;  // per enumeration call
    double max_seconds = 300.0;       // wall clock per enumeration call

    static CapConfig from_environment();  // honours TWOCYCLE_CAP_SECONDS
};

CapConfig& default_caps();

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Shared bookkeeping for one enumeration call.
class CapGuard {
  public:
    CapGuard(const CapConfig& cfg, std::string label)
        : cfg_(cfg), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

    // Count one explored item; throws once the configured cap is hit.
    void tick() {
        if (++count_ > cfg_.max_items)
            throw CapExceeded(label_ + ": item cap " + std::to_string(cfg_.max_items) + " exceeded");
        if ((count_ & 0x3ff) == 0) check_clock();
    }

    long long count() const { return count_; }

  private:
    void check_clock() const {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (elapsed > cfg_.max_seconds)
            throw CapExceeded(label_ + ": time cap " + std::to_string(cfg_.max_seconds) + "s exceeded");
    }

    const CapConfig& cfg_;
    std::string label_;
    std::chrono::steady_clock::time_point start_;
    long long count_ = 0;
};

}  // namespace twocycle

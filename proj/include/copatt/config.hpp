#pragma once

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace copatt {

/// Thrown when an exponential enumeration is asked to exceed the resource cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by bijection decoders on inputs outside the encoded class.
struct out_of_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::atomic<int>& cap_storage() {
    static std::atomic<int> cap = [] {
        if (const char* env = std::getenv("COPATT_MAX_N")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 24;
    }();
    return cap;
}
}  // namespace detail

/// Current enumeration cap (largest weight n whose 2^(n-1)-sized streams we
/// agree to walk). Default 24, overridable with COPATT_MAX_N or set_resource_cap.
inline int resource_cap() { return detail::cap_storage().load(); }

inline void set_resource_cap(int n) { detail::cap_storage().store(n); }

/// Enforces the cap; `what` names the refused enumeration in the message.
inline void check_cap(int n, const std::string& what) {
    const int cap = resource_cap();
    if (n > cap)
        throw cap_error(what + ": n=" + std::to_string(n) + " exceeds resource cap " +
                        std::to_string(cap) + " (raise with COPATT_MAX_N)");
    // the bitmask kernels index compositions with 64-bit masks
    if (n > 62) throw cap_error(what + ": n=" + std::to_string(n) + " exceeds hard limit 62");
}

}  // namespace copatt

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace fk {

// FNV-1a, used for cache keys and word hashing. Stable across runs/platforms.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 1469598103934665603ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    return fnv1a(s.data(), s.size(), h);
}

// Chunked parallel loop. Results must be written to disjoint slots so the
// outcome is independent of scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& body, int threads = 0);

int default_threads();
void set_default_threads(int t);

}  // namespace fk

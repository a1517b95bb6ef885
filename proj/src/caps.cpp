#include "sepgraph/caps.hpp"

#include "sepgraph/error.hpp"

#include <cstdlib>
#include <string>

namespace sepgraph {

Caps Caps::defaults() {
  Caps caps;
  if (const char* env = std::getenv("SSL_MAX_N"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) {
      caps.exponential = static_cast<int>(std::min<long>(v, kMaskLimit));
      caps.toughness = caps.exponential;
    }
  }
  return caps;
}

void enforce_cap(int n, int cap, const char* what) {
  if (n > cap || n > kMaskLimit)
    throw ResourceError(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kMaskLimit)));
}

} // namespace sepgraph

#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace hhc {

/// Worker count for parallel scans: hardware concurrency, capped by the
/// HHC_THREADS environment variable (positive integer) when set.
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HHC_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && static_cast<unsigned long>(cap) < n)
      n = static_cast<unsigned>(cap);
  }
  return n;
}

}  // namespace hhc

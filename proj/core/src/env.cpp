#include "torq/env.hpp"

#include <cstdlib>
#include <string>

namespace torq {

long env_long(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stol(raw);
  } catch (...) {
    return fallback;
  }
}

long order_cap() { return env_long("TORQ_ORDER_CAP", 1'000'000L); }

long enum_budget() { return env_long("TORQ_BUDGET", 4'194'304L); }

int thread_count() {
  long t = env_long("TORQ_THREADS", 1);
  if (t < 1) t = 1;
  if (t > 64) t = 64;
  return static_cast<int>(t);
}

}  // namespace torq

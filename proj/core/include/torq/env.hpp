#pragma once

namespace torq {

// Runtime knobs, read from the environment on each call so tests can vary
// them without process restarts.
//
//   TORQ_ORDER_CAP  cap on total isotropy-group order during sector
//                   enumeration (default 1000000)
//   TORQ_BUDGET     cap on enumeration work units, e.g. supports scanned or
//                   candidate trees generated (default 4194304)
//   TORQ_THREADS    worker threads for support scans (default 1)

long env_long(const char* name, long fallback);
long order_cap();
long enum_budget();
int thread_count();

}  // namespace torq

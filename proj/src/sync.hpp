#pragma once

#include <mutex>
#include <shared_mutex>

namespace rotavg::detail {

#ifdef ROTAVG_SINGLE_THREADED
struct NullMutex {
  void lock() {}
  void unlock() {}
  bool try_lock() { return true; }
  void lock_shared() {}
  void unlock_shared() {}
  bool try_lock_shared() { return true; }
};
using SharedMutex = NullMutex;
#else
using SharedMutex = std::shared_mutex;
#endif

}  // namespace rotavg::detail

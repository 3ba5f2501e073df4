#pragma once

// Functors that mutate shared problem data from inside an operator must go
// through these helpers. Plain writes are only admissible in idempotent mode.

#include <atomic>

namespace graphfx {

template <typename T>
T atomic_load(const T& slot) noexcept {
  return std::atomic_ref<T>(const_cast<T&>(slot)).load(std::memory_order_relaxed);
}

template <typename T>
void atomic_store(T& slot, T value) noexcept {
  std::atomic_ref<T>(slot).store(value, std::memory_order_relaxed);
}

/// Stores min(slot, value) and returns the previous value.
template <typename T>
T atomic_min(T& slot, T value) noexcept {
  std::atomic_ref<T> ref(slot);
  T old = ref.load(std::memory_order_relaxed);
  while (value < old &&
         !ref.compare_exchange_weak(old, value, std::memory_order_acq_rel,
                                    std::memory_order_relaxed)) {
  }
  return old;
}

/// Returns the previous value.
template <typename T>
T atomic_add(T& slot, T value) noexcept {
  return std::atomic_ref<T>(slot).fetch_add(value, std::memory_order_acq_rel);
}

/// True iff slot held `expected` and now holds `desired`.
template <typename T>
bool compare_and_set(T& slot, T expected, T desired) noexcept {
  return std::atomic_ref<T>(slot).compare_exchange_strong(
      expected, desired, std::memory_order_acq_rel, std::memory_order_relaxed);
}

}  // namespace graphfx

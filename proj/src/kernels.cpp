#include "omega/kernels.hpp"

#include <atomic>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omega {

namespace {

std::optional<SampleFailure> scan_serial(
    std::uint64_t n, const std::function<std::optional<std::string>(std::uint64_t)>& probe) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (auto detail = probe(i)) return SampleFailure{i, *detail};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SampleFailure> scan_for_violation(
    std::uint64_t n, ExecMode mode,
    const std::function<std::optional<std::string>(std::uint64_t)>& probe) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && n > 64) {
    std::atomic<std::uint64_t> best{n};
    std::map<std::uint64_t, std::string> failures;
    std::mutex failures_mutex;

    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t ii = 0; ii < count; ++ii) {
      const std::uint64_t i = static_cast<std::uint64_t>(ii);
      // Indices above an already-found failure cannot win; anything at or
      // below it is still evaluated, so the lowest failure is never missed.
      if (i > best.load(std::memory_order_relaxed)) continue;
      if (auto detail = probe(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        std::lock_guard<std::mutex> lock(failures_mutex);
        failures.emplace(i, *detail);
      }
    }
    if (failures.empty()) return std::nullopt;
    auto it = failures.begin();
    return SampleFailure{it->first, it->second};
  }
#else
  (void)mode;
#endif
  return scan_serial(n, probe);
}

std::optional<Scalar> scan_max(
    std::uint64_t n, ExecMode mode,
    const std::function<std::optional<Scalar>(std::uint64_t)>& value) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && n > 64) {
    std::optional<Scalar> result;
    std::mutex result_mutex;

    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
      std::optional<Scalar> local;
#pragma omp for schedule(dynamic, 32) nowait
      for (std::int64_t ii = 0; ii < count; ++ii) {
        if (auto v = value(static_cast<std::uint64_t>(ii))) {
          if (!local || *v > *local) local = *v;
        }
      }
      if (local) {
        std::lock_guard<std::mutex> lock(result_mutex);
        if (!result || *local > *result) result = *local;
      }
    }
    return result;
  }
#else
  (void)mode;
#endif
  std::optional<Scalar> result;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (auto v = value(i)) {
      if (!result || *v > *result) result = *v;
    }
  }
  return result;
}

}  // namespace omega

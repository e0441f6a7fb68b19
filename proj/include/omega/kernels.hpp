#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "omega/scalar.hpp"

namespace omega {

enum class ExecMode { Serial, Parallel };

struct SampleFailure {
  std::uint64_t index = 0;
  std::string detail;
};

// Scans sample indices [0, n). `probe` must be pure; it returns nullopt on
// pass and a human-readable detail on failure. Returns the lowest failing
// index. Serial and parallel modes return identical results.
std::optional<SampleFailure> scan_for_violation(
    std::uint64_t n, ExecMode mode,
    const std::function<std::optional<std::string>(std::uint64_t)>& probe);

// Exact max-reduction of per-index values; indices mapping to nullopt are
// skipped. Returns nullopt when every index was skipped. Order-independent
// because the values are exact rationals.
std::optional<Scalar> scan_max(
    std::uint64_t n, ExecMode mode,
    const std::function<std::optional<Scalar>(std::uint64_t)>& value);

}  // namespace omega

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchstat {

// Thrown when a text form (matching or Dyck word) is malformed; the message
// names the offending token.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by operations that would materialize or enumerate more objects than
// the configured cap allows.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default guard for enumeration-sized results. M(8) = 2,027,025 fits; callers
// override per call (CLI: --cap or MATCHSTAT_CAP).
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

}  // namespace matchstat

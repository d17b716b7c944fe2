#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unitri {

// Default bound on enumerated groups and orbits.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

// Raised when an enumeration would exceed its cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unitri

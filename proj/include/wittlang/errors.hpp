#ifndef WITTLANG_ERRORS_HPP
#define WITTLANG_ERRORS_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wittlang {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on field, shape or encoding.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or table would exceed the configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

// Global enumeration cap. WITTLANG_CAP in the environment overrides the default.
inline std::uint64_t size_cap() {
  if (const char* env = std::getenv("WITTLANG_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultSizeCap;
}

inline void require_within_cap(std::uint64_t count, std::uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw ResourceError(what + ": " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
  }
}

// Saturating integer power, used for sizing enumerations before they run.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

}  // namespace wittlang

#endif  // WITTLANG_ERRORS_HPP

#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nh {

using i8 = int8_t;
using i32 = int32_t;
using i64 = int64_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i128 = __int128;

using VecI = std::vector<i64>;

// Exit-code taxonomy: 2 = bad input, 3 = missing data, 4 = bad cached state.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};
struct MissingDataError : std::runtime_error {
  explicit MissingDataError(const std::string& m) : std::runtime_error(m) {}
};
struct StateError : std::runtime_error {
  explicit StateError(const std::string& m) : std::runtime_error(m) {}
};
// Internal invariant violated: a derived quantity disagrees with a cross-check.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& m) : std::logic_error(m) {}
};
struct SpectralError : std::runtime_error {
  explicit SpectralError(const std::string& m) : std::runtime_error(m) {}
};

[[noreturn]] inline void fail(const std::string& m) { throw ConsistencyError(m); }

inline void require(bool ok, const std::string& m) {
  if (!ok) fail(m);
}

}  // namespace nh

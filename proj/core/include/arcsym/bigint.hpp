#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arcsym {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Narrows to 64 bits; throws std::overflow_error if the value does not fit.
inline std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > BigInt(UINT64_MAX)) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace arcsym

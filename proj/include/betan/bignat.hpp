#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace betan {

/// Arbitrary-precision integer; used for window origins and large offsets.
using BigNat = boost::multiprecision::cpp_int;

/// Decimal digits only. Throws `Error(InvalidArgument)` otherwise.
BigNat parse_bignat(std::string_view text);

inline std::string to_string(const BigNat& n) { return n.str(); }

}  // namespace betan

#include "lme/wide.hpp"

#include <algorithm>

#include "lme/errors.hpp"

namespace lme {

Wide checked_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out))
    raise(Errc::Overflow, "integer overflow in addition");
  return out;
}

Wide checked_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out))
    raise(Errc::Overflow, "integer overflow in subtraction");
  return out;
}

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out))
    raise(Errc::Overflow, "integer overflow in multiplication");
  return out;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Two's complement: |INT128_MIN| is representable unsigned.
  unsigned __int128 u =
      neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
          : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace lme

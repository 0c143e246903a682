#pragma once

#include <cstdint>
#include <string>

namespace lme {

// All invariant arithmetic runs in signed 128-bit integers with explicit
// overflow checks; overflow raises, never wraps.
using Wide = __int128;

Wide checked_add(Wide a, Wide b);
Wide checked_sub(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

std::string to_string(Wide v);

}  // namespace lme

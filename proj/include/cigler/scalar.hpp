#pragma once

namespace cigler::detail {

// Member functions named is_zero() would hide ADL inside the containers.
template <class F> bool scalar_is_zero(const F &x) { return is_zero(x); }

} // namespace cigler::detail

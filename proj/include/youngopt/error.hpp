#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace youngopt {

// Malformed or out-of-contract user input (bad partition, bad table,
// expression syntax, magnitude bound, oracle limit).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A library invariant failed. Never expected under the input contract.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool ok, const char *what)
{
    if (!ok)
        throw internal_error(what);
}

} // namespace detail

// Exact 64-bit arithmetic. The Error parameter selects what an overflow
// means to the caller: bad input or a broken invariant.
template<class Error = internal_error>
std::int64_t checked_add(std::int64_t a, std::int64_t b, const char *what = "integer overflow")
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(what);
    return out;
}

template<class Error = internal_error>
std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char *what = "integer overflow")
{
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Error(what);
    return out;
}

template<class Error = internal_error>
std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char *what = "integer overflow")
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(what);
    return out;
}

} // namespace youngopt

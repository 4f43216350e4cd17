#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "integer.hpp"

namespace rcong {

/// Default ambient integer: arbitrary precision, exact at any magnitude.
/// Expression templates are disabled so arithmetic results are plain
/// values of this type, as the integer_like concept expects.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

static_assert(integer_like<Integer>);
static_assert(integer_like<long long>);

}  // namespace rcong

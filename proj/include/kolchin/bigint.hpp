#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kolchin {

// All arithmetic in this library is exact. Binomials already overflow
// 64 bits around m, s ~ 30, so every integer that can grow is an Int.
using Int = boost::multiprecision::cpp_int;

}  // namespace kolchin

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace overpart {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace overpart

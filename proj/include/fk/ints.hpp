#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fk {

// Exact integers for lamination coordinates (they grow like lambda^n) and
// exact rationals for the planar reference geometry.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace fk

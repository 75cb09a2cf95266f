#pragma once

#include <cstdint>

namespace zs {

// log n split as hi + lo, hi = round-to-double(log n).
struct LogPair {
    double hi;
    double lo;
};

LogPair log_pair(std::uint64_t n);

// (hi + lo) mod 2pi in [0, 2pi), using a three-part representation of 2pi.
double reduce_2pi(double hi, double lo = 0.0);

// (t * log n) mod 2pi in [0, 2pi); the product is carried in double-double.
double phase(double t, std::uint64_t n);

}  // namespace zs

#pragma once

// Exact arithmetic aliases used throughout the library.  Everything is
// integer or rational; no floating point is used anywhere in the math.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mcop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact division: throws if b does not divide a.  Used where divisibility
// is a mathematical guarantee (Weyl dimension formula, Bareiss pivots) so
// that a violated assumption surfaces as an error instead of a wrong value.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a)
        throw std::domain_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

}  // namespace mcop

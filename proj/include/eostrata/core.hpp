#ifndef EOSTRATA_CORE_HPP
#define EOSTRATA_CORE_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eostrata {

using Int = long long;
using Rat = boost::rational<Int>;

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A theorem-backed consistency condition failed; signals an implementation bug.
struct integrity_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string rat_to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int gcd_ll(Int a, Int b) {
    while (b) { Int t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline Int lcm_ll(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

} // namespace eostrata

#endif

// Exact rational scalar used throughout. No floating point anywhere in the
// core library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an internal consistency check fails (maps to exit code 3
/// in the CLI). Anything of this kind is a bug, not a user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

inline int sign(const Rat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

/// "num" or "num/den" rendering, denominator omitted when 1.
inline std::string rat_str(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

/// Parses the rat_str format back; accepts an optional leading sign.
Rat rat_parse(const std::string& s);

/// Scales a rational vector to an integer vector with content 1
/// (gcd of entries). The zero vector is returned unchanged.
std::vector<Rat> primitive_integer(const std::vector<Rat>& v);

} // namespace hsym

#include "hsym/rational.hpp"

namespace hsym {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::vector<Rat> primitive_integer(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Int gcd_num = 0;
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i] * lcm_den;
        gcd_num = boost::multiprecision::gcd(gcd_num, numerator(out[i]));
    }
    if (gcd_num == 0) return out; // zero vector
    for (Rat& x : out) x /= gcd_num;
    return out;
}

} // namespace hsym

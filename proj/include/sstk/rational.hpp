#ifndef SSTK_RATIONAL_HPP
#define SSTK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace sstk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct SubstitutionError : Error {
    using Error::Error;
};
struct ChartError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

inline std::string rat_str(const Rat& r)
{
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline double rat_double(const Rat& r)
{
    return r.convert_to<double>();
}

inline Rat rat_pow(const Rat& r, long k)
{
    if (k < 0) {
        if (r == 0) throw DomainError("rat_pow: 0 to a negative power");
        return Rat(1) / rat_pow(r, -k);
    }
    Rat acc(1), base = r;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& r)
{
    if (r < 0) return std::nullopt;
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int sn = boost::multiprecision::sqrt(n);
    Int sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

} // namespace sstk

#endif

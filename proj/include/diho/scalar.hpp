#ifndef DIHO_SCALAR_HPP
#define DIHO_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace diho {

/// Exact arbitrary-precision scalars. All linear algebra in this library is
/// exact: ranks and normal forms are computed over Q, torsion over Z.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input or contract violation (bad face maps, unknown ids, non-ideal spans, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A product left the length-truncated basis. Callers either raise the cap
/// or accept the truncated (length-filtered) result.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace diho

#endif

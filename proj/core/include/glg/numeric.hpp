#ifndef GLG_NUMERIC_HPP
#define GLG_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace glg {

/// Exact unbounded integer. All counting and series arithmetic uses this;
/// there is no floating point anywhere in the library.
using Int = mpz_class;

/// Exact rational, used for free-algebra coefficients and matrix entries.
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline std::vector<std::string> to_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace glg

#endif

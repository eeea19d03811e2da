#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgf {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Error for inputs outside the configured desk-scale budgets (exit code 3 in the CLI).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Error for malformed inputs (exit code 2 in the CLI).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (exp < 0) {
        if (base == 0) throw validation_error("rat_pow: zero base with negative exponent");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat r = 1, b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// num/den string, the exact form used in CSV output.
inline std::string rat_string(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace sgf

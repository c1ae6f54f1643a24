#ifndef GEOMJOIN_RATIONAL_HPP
#define GEOMJOIN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace geomjoin {

// Exact arithmetic carriers for every coordinate and every LP entry.
// mpq_rational is always canonical: lowest terms, positive denominator.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rat& q) { return q.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

/** Parse "p/q" or "p". Throws InputError on malformed text or q == 0. */
Rat parseRat(std::string_view text);

/** Canonical "p/q" form, denominator always printed ("3" -> "3/1"). */
std::string formatRat(const Rat& q);

}  // namespace geomjoin

#endif

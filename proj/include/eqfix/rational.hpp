#ifndef EQFIX_RATIONAL_HPP
#define EQFIX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "eqfix/errors.hpp"

namespace eqfix {

// All arithmetic in the library is exact. Integers are GMP big integers and
// rationals are GMP rationals kept in canonical form.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integral(r)) throw PreconditionError("rational is not an integer: " + r.get_str());
  return r.get_num();
}

inline int sign_of(const Rat& r) { return sgn(r); }

// Accepts "p" or "p/q" with optional leading minus signs, as in scene files.
Rat parse_fraction(const std::string& text);

// Inverse of parse_fraction: "p" when the denominator is 1, else "p/q".
std::string fraction_str(const Rat& r);

}  // namespace eqfix

#endif

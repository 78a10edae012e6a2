#ifndef MWK_NUMBERS_HPP
#define MWK_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace mwk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

Int powmod(Int base, Int exp, const Int& mod);

/// Deterministic Miller-Rabin, valid for all inputs we ever see.
bool is_prime(const Int& n);

/// Prime factorization of |n|, n != 0. Trial division plus Pollard rho.
std::map<Int, int> factor_int(Int n);

/// Largest square divisor removed: returns the square-free part of n, sign kept.
Int squarefree_part(const Int& n);

/// Square-free representative of the square class of a nonzero rational.
Int squareclass_rep(const Rat& r);

bool is_square_int(const Int& n);
bool is_square_rat(const Rat& r);

/// Legendre symbol (a/p) for odd prime p; a not divisible by p gives +-1, else 0.
int legendre(Int a, const Int& p);

/// Hilbert symbol (a,b)_p at an odd prime p, at 2 (p=2) or at the real place (p=0).
int hilbert(const Rat& a, const Rat& b, const Int& p);

/// Odd primes dividing numerator or denominator of any entry, plus 2.
std::vector<Int> relevant_primes(const std::vector<Rat>& entries);

}  // namespace mwk

#endif

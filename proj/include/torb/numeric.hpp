#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace torb {

// All arithmetic in this library is exact. Intermediate values in Smith
// reduction and determinant expansion overflow machine words even for small
// inputs, so every entry is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

struct ExtGcd {
    Int g;  // gcd(|a|,|b|), always >= 0; gcd(0,0) = 0
    Int x;
    Int y;  // a*x + b*y == g
};

ExtGcd ext_gcd(const Int& a, const Int& b);

// gcd with the convention gcd(x, 0) = |x| and gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

// Canonical residue in [0, n) for n >= 1.
Int mod_floor(const Int& a, const Int& n);

// Inverse of a mod n; requires gcd(a, n) = 1 and n >= 1.
Int mod_inverse(const Int& a, const Int& n);

// Simultaneous congruences x = r_i (mod n_i) for pairwise coprime n_i >= 1.
// Returns (x, prod n_i) with x reduced mod the product. Throws InputError on
// non-coprime moduli. An empty list yields (0, 1).
std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& pairs);

// Prime factorization of n >= 1 by trial division, primes ascending.
// Each entry is (prime, exponent). factorize(1) is empty.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

bool is_prime(const Int& n);

// Splits m >= 1 as 2^s * q with q odd.
std::pair<unsigned, Int> split_two_part(Int m);

}  // namespace torb

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace steengrass {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals backed by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q)
{
    return q.get_den() == 1;
}

inline Int to_int(const Rat& q)
{
    if (!is_integer(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

Int factorial(long n);

// Binomial with the convention C(n,k) = 0 unless 0 <= k <= n.
Int binomial(long n, long k);

// base^exp for exp >= 0; handles negative bases.
Int int_pow(long base, long exp);

// Canonical residue in [0, p).
Int mod_reduce(const Int& v, long p);

// a / b, throwing if b does not divide a.
Int exact_div(const Int& a, const Int& b);

bool is_prime(long p);

}  // namespace steengrass

#include "steengrass/numeric.hpp"

namespace steengrass {

Int factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int int_pow(long base, long exp)
{
    if (exp < 0)
        throw std::invalid_argument("int_pow: negative exponent");
    Int r;
    Int b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Int mod_reduce(const Int& v, long p)
{
    if (p <= 0)
        throw std::invalid_argument("mod_reduce: modulus must be positive");
    Int r = v % p;
    if (r < 0)
        r += p;
    return r;
}

Int exact_div(const Int& a, const Int& b)
{
    if (b == 0)
        throw std::invalid_argument("exact_div: division by zero");
    if (a % b != 0)
        throw std::logic_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    return a / b;
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    Int v(p);
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

}  // namespace steengrass

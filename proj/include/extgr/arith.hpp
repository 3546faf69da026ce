#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace extgr {

// Exact arbitrary-precision scalars. Intermediate values in Smith reduction
// overflow machine words even for small inputs, so everything integral is mpz.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(Int base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long pow_long(long base, unsigned e)
{
    long r = 1;
    while (e--) r *= base;
    return r;
}

inline Int factorial(unsigned n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int gcd(const Int &a, const Int &b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int &a, const Int &b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_string(const Int &v) { return v.get_str(); }

inline std::string to_string(const Rat &v)
{
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace extgr

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace normfib {

// Factorization of rational integers: trial division up to a configurable
// bound, then Pollard rho (Brent variant) on what is left. All parameters in
// this artifact are desk scale, so the sieve path does nearly all the work.

struct PrimePower {
    mpz_class prime;
    int exp;
};

// |n| must be nonzero. Returned primes are positive and strictly increasing;
// the sign of n is not part of the output.
std::vector<PrimePower> factor_integer(const mpz_class& n, unsigned long trial_bound = 1000000);

bool is_prime(const mpz_class& n);

// v_p(n) for n != 0.
int int_valuation(mpz_class n, const mpz_class& p);

// Primes in [lo, hi], ascending.
std::vector<mpz_class> primes_in_range(unsigned long lo, unsigned long hi);

// Smallest prime power >= n (prime powers l^k, k >= 1), or 0 if none below cap.
bool is_prime_power(const mpz_class& q, mpz_class* base = nullptr);

// x with x^2 = a mod p (p odd prime, a a residue); Tonelli-Shanks.
// Returns false if a is a non-residue.
bool sqrt_mod_prime(const mpz_class& a, const mpz_class& p, mpz_class& out);

}  // namespace normfib

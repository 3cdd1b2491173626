#include "normfib/intfactor.hpp"

#include <algorithm>
#include <map>

#include "normfib/errors.hpp"

namespace normfib {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // Brent's cycle variant; n odd composite, not a prime power handled below.
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        mpz_class diff, prod = 1;
        int cnt = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;  // cycle without factor, bump c
            prod = prod * diff % n;
            if (++cnt == 64) {
                mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
                prod = 1;
                cnt = 0;
            }
        }
        if (d == 1 && diff == 0) continue;
        if (d == 1) mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    // perfect power?
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (int k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            mpz_class r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<mpz_class, int> sub;
                factor_rec(r, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    mpz_class d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor_integer(const mpz_class& n, unsigned long trial_bound) {
    if (n == 0) throw DegenerateInput("factor_integer: zero");
    mpz_class m = abs(n);
    std::map<mpz_class, int> acc;
    for (unsigned long p = 2; m > 1 && p <= trial_bound; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_class(p) * p > m) {
            acc[m]++;
            m = 1;
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            acc[mpz_class(p)] += e;
        }
    }
    if (m > 1) factor_rec(m, acc);
    std::vector<PrimePower> out;
    out.reserve(acc.size());
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

int int_valuation(mpz_class n, const mpz_class& p) {
    if (n == 0) throw DegenerateInput("int_valuation: zero");
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

std::vector<mpz_class> primes_in_range(unsigned long lo, unsigned long hi) {
    std::vector<mpz_class> out;
    mpz_class p = lo == 0 ? 1 : mpz_class(lo) - 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > hi) break;
        out.push_back(p);
    }
    return out;
}

bool is_prime_power(const mpz_class& q, mpz_class* base) {
    if (q < 2) return false;
    if (is_prime(q)) {
        if (base) *base = q;
        return true;
    }
    for (int k = 2; k <= (int)mpz_sizeinbase(q.get_mpz_t(), 2); ++k) {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), k) && is_prime(r)) {
            if (base) *base = r;
            return true;
        }
    }
    return false;
}

bool sqrt_mod_prime(const mpz_class& a0, const mpz_class& p, mpz_class& out) {
    mpz_class a = a0 % p;
    if (a < 0) a += p;
    if (a == 0) {
        out = 0;
        return true;
    }
    if (p == 2) {
        out = a;
        return true;
    }
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return false;
    if (p % 4 == 3) {
        mpz_class e = (p + 1) / 4;
        mpz_powm(out.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return true;
    }
    // Tonelli-Shanks
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    mpz_class c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        mpz_class tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    out = r;
    return true;
}

}  // namespace normfib

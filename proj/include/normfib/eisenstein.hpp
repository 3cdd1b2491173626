#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace normfib {

// The ring Z[zeta], zeta^2 + zeta + 1 = 0, as pairs x + y*zeta. A PID with
// unit group of order six; every nonzero element factors uniquely into
// canonical-associate primes times a unit.
struct EisensteinInt {
    mpz_class x, y;

    EisensteinInt() : x(0), y(0) {}
    EisensteinInt(mpz_class a, mpz_class b) : x(std::move(a)), y(std::move(b)) {}
    explicit EisensteinInt(long a) : x(a), y(0) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const EisensteinInt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

    EisensteinInt operator+(const EisensteinInt& o) const { return {x + o.x, y + o.y}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {x - o.x, y - o.y}; }
    EisensteinInt operator-() const { return {-x, -y}; }
    EisensteinInt operator*(const EisensteinInt& o) const {
        // (x1 + y1 z)(x2 + y2 z), z^2 = -1 - z
        return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
    }

    EisensteinInt conj() const { return {x - y, -y}; }  // zeta -> zeta^2
    mpz_class norm() const { return x * x - x * y + y * y; }
    bool is_unit() const { return norm() == 1; }

    std::string str() const;
};

inline EisensteinInt eis_zeta() { return {0, 1}; }
inline EisensteinInt eis_lambda() { return {1, -1}; }  // 1 - zeta, the prime over 3

const std::array<EisensteinInt, 6>& eis_units();

// Euclidean division: a = q*b + r with N(r) < N(b).
void eis_divmod(const EisensteinInt& a, const EisensteinInt& b, EisensteinInt& q, EisensteinInt& r);

bool eis_divides(const EisensteinInt& d, const EisensteinInt& a);
EisensteinInt eis_divexact(const EisensteinInt& a, const EisensteinInt& d);
EisensteinInt eis_gcd(EisensteinInt a, EisensteinInt b);  // canonical associate
EisensteinInt eis_pow(EisensteinInt b, unsigned long e);

// The associate in the sector 0 <= arg < pi/3 (y >= 0 and x > y); for each
// nonzero element exactly one of the six associates qualifies. unit_out, when
// given, receives u with input = u * associate.
EisensteinInt eis_canonical_associate(const EisensteinInt& a, EisensteinInt* unit_out = nullptr);

struct EisPrimePower {
    EisensteinInt prime;  // canonical associate
    int exp;
};

struct EisFactorization {
    EisensteinInt unit;  // one of the six units
    std::vector<EisPrimePower> factors;
};

// Unique factorization over Z[zeta]. Rational primes split per l mod 3:
// l = 1 -> two conjugate primes of norm l, l = 2 -> inert of norm l^2,
// l = 3 -> (1-zeta)^2 up to a unit.
EisFactorization factor_eisenstein(const EisensteinInt& n);

// An Eisenstein prime of norm l (l = 1 mod 3 rational prime), canonical associate.
EisensteinInt eis_split_prime_above(const mpz_class& ell);

int eis_valuation(EisensteinInt n, const EisensteinInt& prime);

}  // namespace normfib

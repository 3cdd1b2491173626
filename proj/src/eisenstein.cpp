#include "normfib/eisenstein.hpp"

#include <algorithm>

#include "normfib/errors.hpp"
#include "normfib/intfactor.hpp"

namespace normfib {

std::string EisensteinInt::str() const {
    if (y == 0) return x.get_str();
    std::string s;
    if (x != 0) s += x.get_str();
    if (y > 0 && !s.empty()) s += "+";
    if (y == -1)
        s += "-";
    else if (y != 1)
        s += y.get_str() + "*";
    s += "ζ";
    return s;
}

const std::array<EisensteinInt, 6>& eis_units() {
    static const std::array<EisensteinInt, 6> u = {
        EisensteinInt{1, 0},  EisensteinInt{0, 1},  EisensteinInt{-1, -1},
        EisensteinInt{-1, 0}, EisensteinInt{0, -1}, EisensteinInt{1, 1},
    };
    return u;
}

namespace {

mpz_class round_div(const mpz_class& n, const mpz_class& d) {
    // nearest integer to n/d, ties toward +inf; d > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) ++q;
    return q;
}

}  // namespace

void eis_divmod(const EisensteinInt& a, const EisensteinInt& b, EisensteinInt& q, EisensteinInt& r) {
    if (b.is_zero()) throw DegenerateInput("eis_divmod: division by zero");
    EisensteinInt num = a * b.conj();
    mpz_class nb = b.norm();
    q = {round_div(num.x, nb), round_div(num.y, nb)};
    r = a - q * b;
}

bool eis_divides(const EisensteinInt& d, const EisensteinInt& a) {
    EisensteinInt q, r;
    eis_divmod(a, d, q, r);
    return r.is_zero();
}

EisensteinInt eis_divexact(const EisensteinInt& a, const EisensteinInt& d) {
    EisensteinInt q, r;
    eis_divmod(a, d, q, r);
    if (!r.is_zero()) throw DegenerateInput("eis_divexact: not divisible");
    return q;
}

EisensteinInt eis_gcd(EisensteinInt a, EisensteinInt b) {
    while (!b.is_zero()) {
        EisensteinInt q, r;
        eis_divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return eis_canonical_associate(a);
}

EisensteinInt eis_pow(EisensteinInt b, unsigned long e) {
    EisensteinInt r{1, 0};
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

EisensteinInt eis_canonical_associate(const EisensteinInt& a, EisensteinInt* unit_out) {
    if (a.is_zero()) {
        if (unit_out) *unit_out = EisensteinInt{1, 0};
        return a;
    }
    for (const auto& u : eis_units()) {
        // candidate = a / u; sector test y >= 0 and x > y
        EisensteinInt cand = a * u.conj();  // u * u.conj() = N(u) = 1, so cand * u = a
        if (cand.y >= 0 && cand.x > cand.y) {
            if (unit_out) *unit_out = u;
            return cand;
        }
    }
    throw Error("eis_canonical_associate: no sector representative (unreachable)");
}

EisensteinInt eis_split_prime_above(const mpz_class& ell) {
    if (ell % 3 != 1) throw PreconditionViolated("eis_split_prime_above: l must be 1 mod 3");
    // sqrt(-3) mod l; zeta = (-1 + sqrt(-3))/2, so gcd(l, s - (1 + 2 zeta)) is prime.
    mpz_class s;
    if (!sqrt_mod_prime(mpz_class(-3), ell, s)) throw Error("eis_split_prime_above: -3 not a residue");
    EisensteinInt g = eis_gcd(EisensteinInt{ell, 0}, EisensteinInt{s - 1, -2});
    if (g.norm() != ell) throw Error("eis_split_prime_above: gcd has wrong norm");
    return g;
}

EisFactorization factor_eisenstein(const EisensteinInt& n0) {
    if (n0.is_zero()) throw DegenerateInput("factor_eisenstein: zero");
    EisFactorization out;
    EisensteinInt rem = n0;
    std::vector<EisPrimePower> fs;
    auto nf = factor_integer(n0.norm());
    for (const auto& [ell, e_norm] : nf) {
        if (ell == 3) {
            EisensteinInt lam = eis_canonical_associate(eis_lambda());
            int e = 0;
            while (eis_divides(lam, rem)) {
                rem = eis_divexact(rem, lam);
                ++e;
            }
            if (e) fs.push_back({lam, e});
        } else if (ell % 3 == 2) {
            EisensteinInt p = eis_canonical_associate(EisensteinInt{ell, 0});
            int e = 0;
            while (eis_divides(p, rem)) {
                rem = eis_divexact(rem, p);
                ++e;
            }
            if (e) fs.push_back({p, e});
        } else {
            EisensteinInt p = eis_split_prime_above(ell);
            EisensteinInt pc = eis_canonical_associate(p.conj());
            for (EisensteinInt pr : {p, pc}) {
                int e = 0;
                while (eis_divides(pr, rem)) {
                    rem = eis_divexact(rem, pr);
                    ++e;
                }
                if (e) fs.push_back({pr, e});
            }
        }
    }
    if (!rem.is_unit()) throw Error("factor_eisenstein: nonunit remainder");
    std::sort(fs.begin(), fs.end(), [](const EisPrimePower& a, const EisPrimePower& b) {
        if (a.prime.norm() != b.prime.norm()) return a.prime.norm() < b.prime.norm();
        if (a.prime.x != b.prime.x) return a.prime.x < b.prime.x;
        return a.prime.y < b.prime.y;
    });
    out.unit = rem;
    out.factors = std::move(fs);
    return out;
}

int eis_valuation(EisensteinInt n, const EisensteinInt& prime) {
    if (n.is_zero()) throw DegenerateInput("eis_valuation: zero");
    int v = 0;
    for (;;) {
        EisensteinInt q, r;
        eis_divmod(n, prime, q, r);
        if (!r.is_zero()) break;
        n = q;
        ++v;
    }
    return v;
}

}  // namespace normfib

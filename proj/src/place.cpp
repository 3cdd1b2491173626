#include "normfib/place.hpp"

#include <algorithm>

#include "normfib/errors.hpp"
#include "normfib/intfactor.hpp"

namespace normfib {

Place Place::real() {
    Place v;
    v.kind = Kind::Real;
    v.ground = Ground::Q;
    return v;
}

Place Place::complex_place() {
    Place v;
    v.kind = Kind::Complex;
    v.ground = Ground::QZeta3;
    return v;
}

Place Place::finite_rational(const mpz_class& p) {
    if (!is_prime(p)) throw PreconditionViolated("finite_rational: not a prime: " + p.get_str());
    Place v;
    v.kind = Kind::Finite;
    v.ground = Ground::Q;
    v.prime = EisensteinInt{p, 0};
    v.ell = p;
    v.q = p;
    v.e = 1;
    return v;
}

Place Place::finite_eisenstein(const EisensteinInt& pi0) {
    EisensteinInt pi = eis_canonical_associate(pi0);
    mpz_class n = pi.norm();
    Place v;
    v.kind = Kind::Finite;
    v.ground = Ground::QZeta3;
    v.prime = pi;
    if (is_prime(n)) {
        v.ell = n;
        v.q = n;
        v.e = (n == 3) ? 2 : 1;
        if (n == 3) v.q = 3;
    } else {
        mpz_class r;
        if (!mpz_root(r.get_mpz_t(), n.get_mpz_t(), 2) || !is_prime(r) || r % 3 != 2)
            throw PreconditionViolated("finite_eisenstein: not a prime element");
        v.ell = r;
        v.q = n;  // inert: residue field of size l^2
        v.e = 1;
    }
    return v;
}

std::vector<Place> Place::above(Ground g, const mpz_class& ell) {
    if (g == Ground::Q) return {finite_rational(ell)};
    if (ell == 3) return {finite_eisenstein(eis_lambda())};
    if (ell % 3 == 2) return {finite_eisenstein(EisensteinInt{ell, 0})};
    EisensteinInt pi = eis_split_prime_above(ell);
    Place a = finite_eisenstein(pi), b = finite_eisenstein(pi.conj());
    if (b < a) std::swap(a, b);
    return {a, b};
}

FieldElem Place::uniformizer() const {
    if (!finite()) throw NotFinite("uniformizer: archimedean place");
    return ground == Ground::Q ? FieldElem::integer(Ground::Q, prime.x)
                               : FieldElem::from_eisenstein(prime);
}

bool Place::operator==(const Place& o) const {
    return kind == o.kind && ground == o.ground && prime == o.prime;
}

bool Place::operator<(const Place& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind;
    if (ell != o.ell) return ell < o.ell;
    if (prime.x != o.prime.x) return prime.x < o.prime.x;
    return prime.y < o.prime.y;
}

std::string Place::str() const {
    if (kind == Kind::Real) return "real";
    if (kind == Kind::Complex) return "complex";
    return "(" + prime.str() + ")";
}

Place Place::parse(Ground g, const std::string& s) {
    if (s == "real") return real();
    if (s == "complex") return complex_place();
    FieldElem e = FieldElem::parse(g, s);
    if (!e.is_integral()) throw ParseError("place must be a prime element: " + s);
    if (g == Ground::Q) {
        mpz_class p = abs(e.num_x());
        return finite_rational(p);
    }
    return finite_eisenstein(e.num_eis());
}

int valuation(const FieldElem& u, const Place& v) {
    if (u.is_zero()) throw DegenerateInput("valuation of zero");
    if (!v.finite()) throw NotFinite("valuation at an archimedean place");
    if (u.ground() != v.ground) throw PreconditionViolated("valuation: field mismatch");
    if (v.ground == Ground::Q) {
        return int_valuation(u.num_x(), v.ell) - int_valuation(u.den(), v.ell);
    }
    int vnum = eis_valuation(u.num_eis(), v.prime);
    int vden = v.e * int_valuation(u.den(), v.ell);
    return vnum - vden;
}

std::vector<Place> support(const FieldElem& u) {
    if (u.is_zero()) throw DegenerateInput("support of zero");
    std::vector<Place> out;
    if (u.ground() == Ground::Q) {
        for (auto& [p, e] : factor_integer(u.num_x() * u.den()))
            out.push_back(Place::finite_rational(p));
    } else {
        EisensteinInt m = u.num_eis() * EisensteinInt{u.den(), 0};
        for (auto& [pr, e] : factor_eisenstein(m).factors)
            out.push_back(Place::finite_eisenstein(pr));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Place> finite_places_up_to_q(Ground g, unsigned long qmax) {
    std::vector<Place> out;
    for (auto& ell : primes_in_range(2, qmax)) {
        for (auto& v : Place::above(g, ell))
            if (v.q <= qmax) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const Place& a, const Place& b) {
        if (a.q != b.q) return a.q < b.q;
        return a < b;
    });
    return out;
}

}  // namespace normfib

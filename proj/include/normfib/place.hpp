#pragma once

#include <optional>
#include <vector>

#include "normfib/field.hpp"

namespace normfib {

// A place of Q or Q(zeta3): the real place, the complex place, or a finite
// place given by a prime element (canonical associate over Q(zeta3)).
struct Place {
    enum class Kind { Real, Complex, Finite };

    Kind kind = Kind::Real;
    Ground ground = Ground::Q;
    EisensteinInt prime;  // finite only; y = 0 over Q
    mpz_class ell = 0;    // residue characteristic
    mpz_class q = 0;      // residue field size
    int e = 1;            // ramification index over ell (2 at lambda | 3)

    static Place real();
    static Place complex_place();
    static Place finite_rational(const mpz_class& p);
    static Place finite_eisenstein(const EisensteinInt& pi);
    // both places above a rational prime (1 or 2 of them over Q(zeta3))
    static std::vector<Place> above(Ground g, const mpz_class& ell);

    bool finite() const { return kind == Kind::Finite; }
    bool archimedean() const { return !finite(); }
    bool is_wild(int p) const { return finite() && ell == p; }
    bool divides_level(int p) const { return is_wild(p); }

    FieldElem uniformizer() const;

    bool operator==(const Place& o) const;
    bool operator<(const Place& o) const;  // deterministic report order

    std::string str() const;
    static Place parse(Ground g, const std::string& s);
};

// Normalized additive valuation, v(pi) = 1. u != 0, v finite.
int valuation(const FieldElem& u, const Place& v);

// Finite places where v(u) != 0, sorted.
std::vector<Place> support(const FieldElem& u);

// All places of the field over the rational prime range [2, bound], plus
// helper enumeration ordered by residue field size.
std::vector<Place> finite_places_up_to_q(Ground g, unsigned long qmax);

}  // namespace normfib

#pragma once

#include <vector>

#include "normfib/field.hpp"

namespace normfib {

// Dense univariate polynomials over the ground field, coefficients low to high,
// no trailing zeros. The zero polynomial has an empty coefficient list and
// degree -1 by convention.
class Poly {
  public:
    explicit Poly(Ground g) : g_(g) {}
    Poly(Ground g, std::vector<FieldElem> coeffs);
    static Poly constant(const FieldElem& c);
    static Poly x(Ground g);
    // c_0 + c_1 x + ... from integer coefficients
    static Poly from_ints(Ground g, const std::vector<long>& cs);

    Ground ground() const { return g_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const FieldElem& operator[](size_t i) const { return c_[i]; }
    const FieldElem& leading() const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    FieldElem eval(const FieldElem& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return g_ == o.g_ && c_ == o.c_; }

    Poly derivative() const;
    // y^d * P(1/y) with d = degree (the reversed coefficient list)
    Poly reversed() const;
    Poly monic() const;

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b);  // monic

    std::string str() const;

  private:
    void trim();
    Ground g_;
    std::vector<FieldElem> c_;
};

// Resultant Res(f, g) via exact Gaussian elimination of the Sylvester matrix.
FieldElem resultant(const Poly& f, const Poly& g);

// disc(P) = (-1)^(n(n-1)/2) Res(P, P') / lc(P); zero iff P has a repeated root.
// deg P >= 1 required.
FieldElem poly_discriminant(const Poly& P);

// Yun squarefree decomposition: P = lc * prod_i out[i]^(i+1) with out[i] monic
// squarefree and pairwise coprime (characteristic zero).
std::vector<Poly> squarefree_decomposition(const Poly& P);

}  // namespace normfib

#pragma once

#include <gmpxx.h>

#include <string>

#include "normfib/eisenstein.hpp"

namespace normfib {

enum class Ground { Q, QZeta3 };

std::string ground_name(Ground g);
Ground parse_ground(const std::string& s);

// An exact element of Q or Q(zeta3), canonical: (nx + ny*zeta)/den with
// den > 0 and gcd(nx, ny, den) = 1 (ny = 0 over Q). Equality is structural.
class FieldElem {
  public:
    FieldElem() : g_(Ground::Q), nx_(0), ny_(0), den_(1) {}

    static FieldElem zero(Ground g) { return FieldElem(g, 0, 0, 1); }
    static FieldElem one(Ground g) { return FieldElem(g, 1, 0, 1); }
    static FieldElem integer(Ground g, const mpz_class& n) { return FieldElem(g, n, 0, 1); }
    static FieldElem from_rational(Ground g, const mpq_class& q);
    static FieldElem from_eisenstein(const EisensteinInt& n, const mpz_class& den = 1);
    // The distinguished primitive p-th root of unity: -1 over Q (p = 2),
    // zeta over Q(zeta3) (p = 3).
    static FieldElem zeta(Ground g);

    Ground ground() const { return g_; }
    bool is_zero() const { return nx_ == 0 && ny_ == 0; }
    bool is_one() const { return nx_ == 1 && ny_ == 0 && den_ == 1; }
    bool is_rational() const { return ny_ == 0; }
    bool is_integral() const { return den_ == 1; }

    const mpz_class& num_x() const { return nx_; }
    const mpz_class& num_y() const { return ny_; }
    const mpz_class& den() const { return den_; }
    EisensteinInt num_eis() const { return {nx_, ny_}; }
    mpq_class as_rational() const;  // requires is_rational()

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;
    FieldElem conj() const;  // identity over Q

    bool operator==(const FieldElem& o) const {
        return g_ == o.g_ && nx_ == o.nx_ && ny_ == o.ny_ && den_ == o.den_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // arbitrary total order (for sorted containers and deterministic reports)
    bool operator<(const FieldElem& o) const;

    // Field norm down to Q: identity on Q, N(x+y*zeta) = x^2 - xy + y^2 on numerators.
    mpq_class norm_to_q() const;

    int sign() const;  // Q only

    // max(|coords|, den), a crude height for deterministic sampling
    mpz_class height() const;

    std::string str() const;
    static FieldElem parse(Ground g, const std::string& s);

  private:
    FieldElem(Ground g, mpz_class nx, mpz_class ny, mpz_class den)
        : g_(g), nx_(std::move(nx)), ny_(std::move(ny)), den_(std::move(den)) {
        canonicalize();
    }
    void canonicalize();

    Ground g_;
    mpz_class nx_, ny_, den_;
};

}  // namespace normfib

#pragma once

#include <vector>

#include "normfib/place.hpp"

namespace normfib {

// Elements of F_{l^n} as coefficient vectors over F_l w.r.t. a monic modulus.
using RFElem = std::vector<mpz_class>;

class ResidueField {
  public:
    // The residue field of a finite place (deg 1, or deg 2 with modulus
    // T^2+T+1 at inert places of Q(zeta3)).
    explicit ResidueField(const Place& v);
    // Unramified extension of residue degree f: F_{q^f}, with the image of
    // zeta carried along (embedding fixed by a chosen root of T^2+T+1).
    ResidueField extension(int f) const;

    const mpz_class& ell() const { return ell_; }
    const mpz_class& q() const { return q_; }
    int deg() const { return deg_; }
    const RFElem& zeta_image() const { return zeta_; }  // image of the global zeta3 (QZeta3 only)

    RFElem zero() const { return RFElem(deg_, 0); }
    RFElem one() const;
    RFElem from_int(const mpz_class& n) const;
    // x + y*zeta via the stored zeta image
    RFElem from_pair(const mpz_class& x, const mpz_class& y) const;

    bool is_zero(const RFElem& a) const;
    RFElem add(const RFElem& a, const RFElem& b) const;
    RFElem sub(const RFElem& a, const RFElem& b) const;
    RFElem mul(const RFElem& a, const RFElem& b) const;
    RFElem pow(RFElem b, mpz_class e) const;
    RFElem inv(const RFElem& a) const;
    RFElem neg(const RFElem& a) const;

    // index <-> element, for exhaustive enumeration (0 <= i < q)
    RFElem element(const mpz_class& index) const;

    // dlog of a^((q-1)/p) in mu_p w.r.t. the distinguished p-th root of
    // unity (-1 for p=2, the zeta image for p=3). a != 0.
    int unit_class(const RFElem& a, int p) const;

    // a in (F_q^x)^p ? (equivalent to unit_class == 0; p | q-1 assumed)
    bool is_pth_power(const RFElem& a, int p) const;

  private:
    ResidueField() = default;
    mpz_class ell_, q_;
    int deg_ = 1;
    std::vector<mpz_class> mod_;  // monic, degree deg_
    RFElem zeta_;
    bool has_zeta_ = false;
};

// Galois ring (Z/l^N)[T]/(h~): the quotient O_L / l^N of the unramified
// extension L of Q_l with residue field F_{l^deg}. Used to enumerate points
// over unramified extensions at tame places.
class GaloisRing {
  public:
    GaloisRing(const ResidueField& F, int N);

    using Elem = std::vector<mpz_class>;

    const ResidueField& residue_field() const { return F_; }
    int precision() const { return N_; }
    const mpz_class& ell() const { return ell_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    Elem from_int(const mpz_class& n) const;
    Elem from_pair(const mpz_class& x, const mpz_class& y) const;  // x + y*zeta, Hensel-lifted zeta
    // v-integral field element (denominator coprime to l)
    Elem from_field(const FieldElem& u) const;
    Elem lift(const RFElem& r) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scal(const Elem& a, const mpz_class& c) const;

    // min_i v_l(coeff_i), capped at N (the cap means "zero mod l^N")
    int valuation(const Elem& a) const;
    // residue of a / l^m in F_{l^deg}; requires valuation(a) == m < N
    RFElem unit_residue(const Elem& a, int m) const;

    Elem eval_poly(const std::vector<Elem>& coeffs, const Elem& x) const;
    std::vector<Elem> map_poly(const std::vector<FieldElem>& coeffs) const;

  private:
    ResidueField F_;
    int N_;
    int deg_;
    mpz_class ell_, mod_ln_;      // l^N
    std::vector<mpz_class> hmod_;  // monic modulus, coefficients mod l^N
    Elem zeta_;                    // root of X^2+X+1 lifted to the ring
    bool has_zeta_ = false;
};

// Residue of u * pi^(-valuation(u,v)) in the residue field of v. Exact;
// handles denominators divisible by l via pi pi-bar = l.
RFElem unit_residue(const FieldElem& u, const Place& v, const ResidueField& F);

}  // namespace normfib

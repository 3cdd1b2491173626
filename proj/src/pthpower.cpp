#include "normfib/pthpower.hpp"

#include <algorithm>
#include <set>

#include "normfib/errors.hpp"
#include "normfib/intfactor.hpp"

namespace normfib {

namespace {

bool mpz_is_pth_power(const mpz_class& n, int p, mpz_class* root = nullptr) {
    if (n == 0) {
        if (root) *root = 0;
        return true;
    }
    if (n < 0 && p % 2 == 0) return false;
    mpz_class a = abs(n), r;
    if (!mpz_root(r.get_mpz_t(), a.get_mpz_t(), p)) return false;
    if (root) *root = (n < 0) ? mpz_class(-r) : r;
    return true;
}

}  // namespace

bool is_global_pth_power(const FieldElem& u, int p) {
    if (u.is_zero()) throw DegenerateInput("is_global_pth_power: zero");
    if (u.ground() == Ground::Q) {
        return mpz_is_pth_power(u.num_x(), p) && mpz_is_pth_power(u.den(), p);
    }
    // u = n/d with d a positive rational integer: u = n*d^(p-1) / d^p, so u is a
    // p-th power iff the single Eisenstein integer n*d^(p-1) is one.
    EisensteinInt m = u.num_eis();
    for (int i = 1; i < p; ++i) m = m * EisensteinInt{u.den(), 0};
    auto f = factor_eisenstein(m);
    for (const auto& [pr, e] : f.factors)
        if (e % p != 0) return false;
    for (const auto& w : eis_units())
        if (eis_pow(w, p) == f.unit) return true;
    return false;
}

std::vector<FieldElem> field_roots(const Poly& P) {
    Ground g = P.ground();
    if (P.is_zero()) throw DegenerateInput("field_roots: zero polynomial");
    if (P.degree() == 0) return {};
    // clear denominators to an integral primitive polynomial
    mpz_class D = 1;
    for (auto& c : P.coeffs()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), D.get_mpz_t(), c.den().get_mpz_t());
        D = l;
    }
    std::vector<EisensteinInt> ic;
    for (auto& c : P.coeffs()) ic.push_back(c.num_eis() * EisensteinInt{D / c.den(), 0});
    while (ic.front().is_zero()) ic.erase(ic.begin());  // factor out x | P; x=0 handled below

    std::vector<FieldElem> roots;
    if (P.eval(FieldElem::zero(g)).is_zero()) roots.push_back(FieldElem::zero(g));

    auto divisors = [&](const EisensteinInt& n) {
        std::vector<EisensteinInt> ds{EisensteinInt{1, 0}};
        auto f = factor_eisenstein(n);
        for (const auto& [pr, e] : f.factors) {
            std::vector<EisensteinInt> next;
            EisensteinInt pk{1, 0};
            for (int k = 0; k <= e; ++k) {
                for (auto& d : ds) next.push_back(d * pk);
                pk = pk * pr;
            }
            ds = std::move(next);
        }
        return ds;
    };

    std::set<FieldElem> seen;
    if (g == Ground::Q) {
        auto int_divisors = [](const mpz_class& n) {
            std::vector<mpz_class> ds{1};
            for (auto& [pr, e] : factor_integer(n)) {
                std::vector<mpz_class> next;
                mpz_class pk = 1;
                for (int k = 0; k <= e; ++k) {
                    for (auto& d : ds) next.push_back(d * pk);
                    pk *= pr;
                }
                ds = std::move(next);
            }
            return ds;
        };
        auto num_divs = int_divisors(ic.front().x);
        auto den_divs = int_divisors(ic.back().x);
        for (auto& s : num_divs)
            for (auto& t : den_divs)
                for (int sign : {1, -1}) {
                    FieldElem cand = FieldElem::from_rational(
                        g, mpq_class(sign * s, t));
                    if (seen.count(cand)) continue;
                    seen.insert(cand);
                    if (P.eval(cand).is_zero()) roots.push_back(cand);
                }
    } else {
        auto num_divs = divisors(ic.front());
        auto den_divs = divisors(ic.back());
        for (auto& s : num_divs)
            for (auto& t : den_divs)
                for (const auto& w : eis_units()) {
                    EisensteinInt numc = s * w;
                    // candidate numc / t as a field element
                    FieldElem cand = FieldElem::from_eisenstein(numc) /
                                     FieldElem::from_eisenstein(t);
                    if (seen.count(cand)) continue;
                    seen.insert(cand);
                    if (P.eval(cand).is_zero()) roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_irreducible_deg_p(const Poly& Q, Ground field, int p) {
    if (p != 2 && p != 3) throw Unsupported("is_irreducible_deg_p: p must be 2 or 3");
    if (Q.ground() != field) throw PreconditionViolated("is_irreducible_deg_p: field mismatch");
    if (Q.degree() != p) throw PreconditionViolated("is_irreducible_deg_p: degree != p");
    return field_roots(Q).empty();
}

bool binomial_has_root_in_kummer_ext(const Poly& Q, const FieldElem& d, int p) {
    Ground g = Q.ground();
    if (Q.degree() != p) throw PreconditionViolated("binomial_has_root_in_kummer_ext: degree != p");
    FieldElem e = FieldElem::zero(g);
    if (g == Ground::Q && p == 2) {
        // k_Q = Q(sqrt(disc)); root of Q in it iff e = disc/4-shape; use
        // e = b^2 - 4ac, the square generating the extension.
        e = poly_discriminant(Q);
    } else {
        for (int i = 1; i < p; ++i)
            if (!Q[i].is_zero())
                throw Unsupported("binomial_has_root_in_kummer_ext: needs binomial x^p + c shape");
        e = -Q[0] / Q.leading();  // the root's p-th power
    }
    if (e.is_zero()) throw DegenerateInput("binomial_has_root_in_kummer_ext: degenerate binomial");
    // root in k(d^(1/p)) iff e is a p-th power times d^j for some j
    FieldElem t = e;
    for (int j = 0; j < p; ++j) {
        if (is_global_pth_power(t, p)) return true;
        t = t / d;
    }
    return false;
}

}  // namespace normfib

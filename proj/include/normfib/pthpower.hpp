#pragma once

#include "normfib/poly.hpp"

namespace normfib {

// u = w^p for some w in the ground field? Exact p-th root extraction on
// numerator/denominator factorizations; the ground-truth oracle the
// classification demonstrator is tested against.
bool is_global_pth_power(const FieldElem& u, int p);

// Root-absence test, valid as an irreducibility criterion in prime degree <= 3.
// pre: deg Q = p, p in {2,3}.
bool is_irreducible_deg_p(const Poly& Q, Ground field, int p);

// Does Q (irreducible over k of degree p) have a root in K = k(d^(1/p))?
// Requires Q of the binomial shape lc*x^p + c0 over Q(zeta3); any quadratic
// over Q. Kummer criterion: the root generates k(e^(1/p)) for e = -c0/lc,
// contained in K iff e is d^j times a p-th power for some j.
bool binomial_has_root_in_kummer_ext(const Poly& Q, const FieldElem& d, int p);

// All roots of P in the ground field (rational root theorem over Z / Z[zeta]).
std::vector<FieldElem> field_roots(const Poly& P);

}  // namespace normfib

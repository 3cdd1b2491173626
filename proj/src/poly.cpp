#include "normfib/poly.hpp"

#include <algorithm>

#include "normfib/errors.hpp"

namespace normfib {

Poly::Poly(Ground g, std::vector<FieldElem> coeffs) : g_(g), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.ground());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::x(Ground g) {
    return Poly(g, {FieldElem::zero(g), FieldElem::one(g)});
}

Poly Poly::from_ints(Ground g, const std::vector<long>& cs) {
    std::vector<FieldElem> v;
    v.reserve(cs.size());
    for (long c : cs) v.push_back(FieldElem::integer(g, c));
    return Poly(g, std::move(v));
}

const FieldElem& Poly::leading() const {
    if (c_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
    return c_.back();
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem r = FieldElem::zero(g_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> v(std::max(c_.size(), o.c_.size()), FieldElem::zero(g_));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
    return Poly(g_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(-c);
    return Poly(g_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(g_);
    std::vector<FieldElem> v(c_.size() + o.c_.size() - 1, FieldElem::zero(g_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    return Poly(g_, std::move(v));
}

Poly Poly::operator*(const FieldElem& s) const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (auto& c : c_) v.push_back(c * s);
    return Poly(g_, std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(g_);
    std::vector<FieldElem> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * FieldElem::integer(g_, (long)i));
    return Poly(g_, std::move(v));
}

Poly Poly::reversed() const {
    std::vector<FieldElem> v(c_.rbegin(), c_.rend());
    return Poly(g_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
    Ground g = a.g_;
    q = Poly(g);
    r = a;
    FieldElem lb = b.leading().inverse();
    std::vector<FieldElem> qc;
    if (r.degree() >= b.degree()) qc.assign(r.degree() - b.degree() + 1, FieldElem::zero(g));
    while (r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        FieldElem c = r.leading() * lb;
        qc[k] = c;
        std::vector<FieldElem> sub(k, FieldElem::zero(g));
        sub.insert(sub.end(), b.c_.begin(), b.c_.end());
        Poly s(g, std::move(sub));
        r = r - s * c;
    }
    q = Poly(g, std::move(qc));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q(a.g_), r(a.g_);
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i >= 1) s += "*x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

FieldElem resultant(const Poly& f, const Poly& g) {
    Ground G = f.ground();
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return FieldElem::zero(G);
    if (m == 0) return f[0].pow(n);
    if (n == 0) return g[0].pow(m);
    int N = m + n;
    std::vector<std::vector<FieldElem>> M(N, std::vector<FieldElem>(N, FieldElem::zero(G)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = g[n - j];
    // exact Gaussian elimination, tracking the determinant
    FieldElem det = FieldElem::one(G);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return FieldElem::zero(G);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det = det * M[col][col];
        FieldElem inv = M[col][col].inverse();
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col].is_zero()) continue;
            FieldElem factor = M[r][col] * inv;
            for (int c2 = col; c2 < N; ++c2) M[r][c2] = M[r][c2] - factor * M[col][c2];
        }
    }
    return det;
}

FieldElem poly_discriminant(const Poly& P) {
    if (P.degree() < 1) throw DegenerateInput("poly_discriminant: degree must be >= 1");
    int n = P.degree();
    FieldElem r = resultant(P, P.derivative());
    FieldElem d = r / P.leading();
    if (((long)n * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

std::vector<Poly> squarefree_decomposition(const Poly& P) {
    if (P.is_zero()) throw DegenerateInput("squarefree_decomposition: zero polynomial");
    Ground g = P.ground();
    std::vector<Poly> out;
    Poly f = P.monic();
    if (f.degree() == 0) return out;
    Poly fp = f.derivative();
    Poly a = Poly::gcd(f, fp);
    Poly b(g), c(g), qdummy(g), r(g);
    Poly::divmod(f, a, b, r);
    Poly::divmod(fp, a, c, r);
    // Yun: iterate d = c - b', factor_i = gcd(b, d)
    while (b.degree() > 0) {
        Poly d = c - b.derivative();
        Poly fi = Poly::gcd(b, d);
        out.push_back(fi);
        Poly::divmod(b, fi, qdummy, r);
        b = qdummy;
        Poly::divmod(d, fi, qdummy, r);
        c = qdummy;
    }
    return out;
}

}  // namespace normfib

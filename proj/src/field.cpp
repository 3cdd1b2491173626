#include "normfib/field.hpp"

#include <cctype>

#include "normfib/errors.hpp"

namespace normfib {

std::string ground_name(Ground g) { return g == Ground::Q ? "Q" : "Q(zeta3)"; }

Ground parse_ground(const std::string& s) {
    if (s == "Q") return Ground::Q;
    if (s == "Q(zeta3)" || s == "Q(z3)" || s == "Q(ζ₃)" || s == "Q(zeta_3)")
        return Ground::QZeta3;
    throw ParseError("unknown ground field: " + s);
}

void FieldElem::canonicalize() {
    if (g_ == Ground::Q && ny_ != 0) throw DegenerateInput("rational element with zeta part");
    if (den_ == 0) throw DegenerateInput("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        nx_ = -nx_;
        ny_ = -ny_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), nx_.get_mpz_t(), ny_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(nx_.get_mpz_t(), nx_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(ny_.get_mpz_t(), ny_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

FieldElem FieldElem::from_rational(Ground g, const mpq_class& q) {
    return FieldElem(g, q.get_num(), 0, q.get_den());
}

FieldElem FieldElem::from_eisenstein(const EisensteinInt& n, const mpz_class& den) {
    return FieldElem(Ground::QZeta3, n.x, n.y, den);
}

FieldElem FieldElem::zeta(Ground g) {
    return g == Ground::Q ? FieldElem(g, -1, 0, 1) : FieldElem(g, 0, 1, 1);
}

mpq_class FieldElem::as_rational() const {
    if (ny_ != 0) throw DegenerateInput("as_rational: element not rational");
    mpq_class q(nx_, den_);
    q.canonicalize();
    return q;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (g_ != o.g_) throw DegenerateInput("mixed ground fields");
    return FieldElem(g_, nx_ * o.den_ + o.nx_ * den_, ny_ * o.den_ + o.ny_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const { return FieldElem(g_, -nx_, -ny_, den_); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (g_ != o.g_) throw DegenerateInput("mixed ground fields");
    EisensteinInt n = EisensteinInt{nx_, ny_} * EisensteinInt{o.nx_, o.ny_};
    return FieldElem(g_, n.x, n.y, den_ * o.den_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DegenerateInput("inverse of zero");
    EisensteinInt n{nx_, ny_};
    EisensteinInt c = n.conj();
    // 1 / (n/den) = den * conj(n) / N(n)
    return FieldElem(g_, den_ * c.x, den_ * c.y, n.norm());
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = one(g_), b = *this;
    unsigned long k = e;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FieldElem FieldElem::conj() const { return FieldElem(g_, nx_ - ny_, -ny_, den_); }

bool FieldElem::operator<(const FieldElem& o) const {
    if (g_ != o.g_) return g_ < o.g_;
    if (nx_ != o.nx_) return nx_ < o.nx_;
    if (ny_ != o.ny_) return ny_ < o.ny_;
    return den_ < o.den_;
}

mpq_class FieldElem::norm_to_q() const {
    mpq_class q;
    if (g_ == Ground::Q)
        q = mpq_class(nx_, den_);
    else
        q = mpq_class(EisensteinInt{nx_, ny_}.norm(), den_ * den_);
    q.canonicalize();
    return q;
}

int FieldElem::sign() const {
    if (g_ != Ground::Q) throw Unsupported("sign: only ordered over Q");
    return sgn(nx_);
}

mpz_class FieldElem::height() const {
    mpz_class h = abs(nx_);
    if (abs(ny_) > h) h = abs(ny_);
    if (den_ > h) h = den_;
    return h;
}

std::string FieldElem::str() const {
    std::string s;
    if (g_ == Ground::Q || ny_ == 0) {
        s = nx_.get_str();
    } else {
        s = EisensteinInt{nx_, ny_}.str();
        if (den_ != 1) s = "(" + s + ")";
    }
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
}

namespace {

// grammar: elem := term (('+'|'-') term)* ('/' uint)?  term := int | int? zeta
// zeta spelled "z" or UTF-8 zeta; whitespace ignored.
struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_zeta() {
        skip();
        if (i < s.size() && (s[i] == 'z' || s[i] == 'Z')) {
            ++i;
            return true;
        }
        if (i + 1 < s.size() && (unsigned char)s[i] == 0xce && (unsigned char)s[i + 1] == 0xb6) {
            i += 2;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit((unsigned char)s[i]);
    }
    mpz_class read_uint() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw ParseError("expected integer in '" + s + "'");
        mpz_class v(s.substr(i, j - i));
        i = j;
        return v;
    }
};

}  // namespace

FieldElem FieldElem::parse(Ground g, const std::string& in) {
    Parser p(in);
    bool paren = p.eat('(');
    mpz_class nx = 0, ny = 0;
    bool first = true;
    for (;;) {
        p.skip();
        int sign = 1;
        if (p.eat('-'))
            sign = -1;
        else if (p.eat('+'))
            sign = 1;
        else if (!first)
            break;
        mpz_class coef = 1;
        bool have_coef = false;
        if (p.peek_digit()) {
            coef = p.read_uint();
            have_coef = true;
        }
        p.eat('*');
        if (p.eat_zeta())
            ny += sign * coef;
        else if (have_coef)
            nx += sign * coef;
        else
            throw ParseError("dangling sign in '" + in + "'");
        first = false;
        p.skip();
        if (p.i >= p.s.size() || (p.s[p.i] != '+' && p.s[p.i] != '-')) break;
    }
    if (paren && !p.eat(')')) throw ParseError("missing ')' in '" + in + "'");
    mpz_class den = 1;
    if (p.eat('/')) den = p.read_uint();
    p.skip();
    if (p.i != p.s.size()) throw ParseError("trailing characters in '" + in + "'");
    if (g == Ground::Q && ny != 0) throw ParseError("zeta term in rational element: " + in);
    return FieldElem(g, nx, ny, den);
}

}  // namespace normfib

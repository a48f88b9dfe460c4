#include "cplv/ratfunc.hpp"

#include <cctype>

#include "cplv/error.hpp"

namespace cplv {

RatFunc RatFunc::raw(Poly n, Poly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den.is_constant()) {
        Scalar k = den.constant_term().inv();
        num_ = num * k;
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = *exact_div(num, g), d = *exact_div(den, g);
    Scalar k = d.lead_coeff().inv();
    num_ = n * k;
    den_ = d * k;
}

Scalar RatFunc::constant() const { return num_.constant_term() * den_.constant_term().inv(); }

RatFunc RatFunc::operator-() const { return raw(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc::raw(a.num_ * b.num_, Poly(1));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    return raw(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

Scalar RatFunc::eval(const Assignment& a) const {
    Scalar d = den_.eval(a);
    if (d.is_zero()) throw Error(Errc::DenominatorVanishes, "denominator " + den_.str() + " vanishes");
    return num_.eval(a) / d;
}

RatFunc RatFunc::subst(const Assignment& a) const {
    Poly d = den_.subst(a);
    if (d.is_zero()) throw Error(Errc::DenominatorVanishes, "denominator " + den_.str() + " vanishes");
    return RatFunc(num_.subst(a), d);
}

RatFunc RatFunc::subst(const std::map<Var, RatFunc>& s) const {
    // bring both sides over the common denominator prod q_v^{D_v}
    std::map<Var, unsigned> D;
    for (auto& [v, f] : s) D[v] = std::max(num_.degree(v), den_.degree(v));
    auto image = [&](const Poly& p) {
        Poly out;
        for (auto& [e, c] : p.terms()) {
            Exponents rest = e;
            Poly t(c);
            for (auto& [v, f] : s) {
                int k = static_cast<int>(v);
                unsigned ev = e[k];
                rest[k] = 0;
                if (ev) t *= f.num_.pow(ev);
                if (D[v] > ev) t *= f.den_.pow(D[v] - ev);
            }
            out += t * Poly::monomial(Scalar(1), rest);
        }
        return out;
    };
    Poly d = image(den_);
    if (d.is_zero()) throw Error(Errc::DenominatorVanishes, "denominator " + den_.str() + " vanishes under substitution");
    return RatFunc(image(num_), d);
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.str();
    auto wrap = [](const Poly& p) { return p.terms().size() > 1 ? "(" + p.str() + ")" : p.str(); };
    return wrap(num_) + "/" + wrap(den_);
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (eat('*'))
                r = r * unary();
            else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }
    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RatFunc power() {
        RatFunc b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            int e = std::stoi(std::string(s.substr(start, pos - start)));
            if (neg && b.is_zero()) fail("negative power of zero");
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    RatFunc atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc(Scalar(mpq_class(std::string(s.substr(start, pos - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string_view id = s.substr(start, pos - start);
            if (id == "i") return RatFunc(Scalar::i());
            auto v = var_from_name(id);
            if (!v) fail("unknown variable '" + std::string(id) + "'");
            return RatFunc::var(*v);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

RatFunc RatFunc::parse(std::string_view s) {
    Parser p{s};
    RatFunc r = p.expr();
    p.skip();
    if (p.pos != s.size()) p.fail("trailing input");
    return r;
}

bool ratfunc_is_zero(const RatFunc& f) { return f.is_zero(); }

Scalar ratfunc_eval(const RatFunc& f, const Assignment& a) { return f.eval(a); }

RatFunc limit_at_zero(const RatFunc& f, Var v) {
    Poly d0 = f.den().subst(v, Scalar(0));
    if (d0.is_zero())
        throw Error(Errc::NoFiniteLimit, std::string("pole at ") + var_name(v) + "=0 in " + f.str());
    return RatFunc(f.num().subst(v, Scalar(0)), d0);
}

}  // namespace cplv

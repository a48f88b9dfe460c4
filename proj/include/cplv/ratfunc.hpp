#pragma once
#include <map>
#include <string>
#include <string_view>

#include "cplv/poly.hpp"

namespace cplv {

// num/den kept reduced, den monic under grlex.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Scalar& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(Scalar(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);  // DivisionByZero on den == 0

    static RatFunc var(Var v) { return RatFunc(Poly::var(v)); }
    // infix: + - * / ^, parentheses, integers, i, variable names
    static RatFunc parse(std::string_view s);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant() const;  // value when is_constant()
    bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inv() const;
    RatFunc pow(int e) const;

    Scalar eval(const Assignment& a) const;
    // partial numeric substitution; DenominatorVanishes if the result has a zero denominator
    RatFunc subst(const Assignment& a) const;
    // simultaneous substitution of rational functions for variables
    RatFunc subst(const std::map<Var, RatFunc>& s) const;

    std::string str() const;

private:
    static RatFunc raw(Poly n, Poly d);
    Poly num_, den_;
};

using RatSubst = std::map<Var, RatFunc>;

bool ratfunc_is_zero(const RatFunc& f);
Scalar ratfunc_eval(const RatFunc& f, const Assignment& a);
// value at var = 0 when the reduced denominator does not vanish there; NoFiniteLimit otherwise
RatFunc limit_at_zero(const RatFunc& f, Var v = Var::t);

}  // namespace cplv

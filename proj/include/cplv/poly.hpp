#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplv/scalar.hpp"

namespace cplv {

// The variable set is fixed. Order here is also the lex tie-break order.
enum class Var : std::uint8_t { alpha, beta, gamma, t, xi, nu };
constexpr int kNumVars = 6;
constexpr std::array<Var, kNumVars> kAllVars = {Var::alpha, Var::beta, Var::gamma, Var::t, Var::xi, Var::nu};

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view s);

using Exponents = std::array<std::uint16_t, kNumVars>;
using Assignment = std::map<Var, Scalar>;

unsigned total_degree(const Exponents& e);

// graded lex, larger monomials first
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
public:
    using Terms = std::map<Exponents, Scalar, GrlexGreater>;

    Poly() = default;
    Poly(const Scalar& c);
    Poly(long c) : Poly(Scalar(c)) {}
    static Poly var(Var v, unsigned e = 1);
    static Poly monomial(const Scalar& c, const Exponents& e);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    bool contains(Var v) const { return degree(v) > 0; }
    unsigned degree(Var v) const;
    unsigned total_degree() const;
    // leading data under grlex; undefined on zero
    const Exponents& lead_exp() const { return terms_.begin()->first; }
    const Scalar& lead_coeff() const { return terms_.begin()->second; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;
    Poly derivative(Var v) const;
    Poly subst(Var v, const Scalar& s) const;
    Poly subst(const Assignment& a) const;
    Scalar eval(const Assignment& a) const;  // MissingVariable if a variable is unassigned

    // view as a polynomial in v; index = power of v
    std::vector<Poly> coeffs(Var v) const;
    static Poly from_coeffs(Var v, const std::vector<Poly>& c);

    std::string str() const;

private:
    void add_term(const Exponents& e, const Scalar& c);
    Terms terms_;
};

// quotient when b divides a exactly
std::optional<Poly> exact_div(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Poly content(const Poly& p, Var v);
Poly primitive_part(const Poly& p, Var v);
Poly prem(const Poly& a, const Poly& b, Var v);
Poly resultant(const Poly& a, const Poly& b, Var v);

}  // namespace cplv

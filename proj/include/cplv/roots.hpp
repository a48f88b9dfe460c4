#pragma once
#include <vector>

#include "cplv/poly.hpp"

namespace cplv {

// dense univariate polynomial over Q(i); c[k] multiplies x^k
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> c);
    // throws MissingVariable if p involves any variable other than v
    static UPoly from_poly(const Poly& p, Var v);

    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar eval(const Scalar& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);

private:
    void trim();
    std::vector<Scalar> c_;
};

// All roots of p lying in Q(i), each once. Candidates come from a numeric
// solve and are only reported after exact verification.
std::vector<Scalar> gaussian_rational_roots(const UPoly& p);

}  // namespace cplv

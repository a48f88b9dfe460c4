#include "cplv/roots.hpp"

#include <cmath>
#include <complex>

#include "cplv/error.hpp"

namespace cplv {

UPoly::UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, Var v) {
    std::vector<Poly> pc = p.coeffs(v);
    std::vector<Scalar> c;
    for (auto& q : pc) {
        if (!q.is_constant()) throw Error(Errc::MissingVariable, "polynomial " + p.str() + " is not univariate");
        c.push_back(q.constant_term());
    }
    return UPoly(std::move(c));
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar r;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    Scalar k = c_.back().inv();
    std::vector<Scalar> m = c_;
    for (auto& x : m) x *= k;
    return UPoly(std::move(m));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "univariate division by zero");
    std::vector<Scalar> rem = a.c_;
    int db = b.degree();
    std::vector<Scalar> quo(a.degree() >= db ? a.degree() - db + 1 : 0);
    Scalar lb = b.c_.back().inv();
    for (int k = a.degree(); k >= db; --k) {
        Scalar f = rem[k] * lb;
        quo[k - db] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

using cld = std::complex<long double>;

long double to_ld(const mpq_class& q) { return static_cast<long double>(q.get_d()); }

// simultaneous iteration on a squarefree monic polynomial
std::vector<cld> numeric_roots(const UPoly& p) {
    int n = p.degree();
    std::vector<cld> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = cld(to_ld(p.coeffs()[k].re()), to_ld(p.coeffs()[k].im()));
    auto f = [&](cld x) {
        cld r = 0;
        for (int k = n; k >= 0; --k) r = r * x + a[k];
        return r;
    };
    long double radius = 1;
    for (int k = 0; k < n; ++k) radius = std::max(radius, 1 + std::abs(a[k]));
    std::vector<cld> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(radius * 0.9L, 0.4L + 6.283185307179586L * k / n);
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int k = 0; k < n; ++k) {
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[k] - z[j];
            if (std::abs(den) == 0) den = 1e-30L;
            cld step = f(z[k]) / den;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-18L) break;
    }
    return z;
}

// closest fraction with denominator below the bound, via continued fractions
mpq_class rationalize(long double x) {
    const long double tol = 1e-9L * std::max<long double>(1, std::fabs(x));
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double r = x;
    for (int it = 0; it < 40; ++it) {
        long double fl = std::floor(r);
        mpz_class a(static_cast<double>(fl));
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        mpq_class q(h1, k1);
        q.canonicalize();
        if (std::fabs(to_ld(q) - x) <= tol || k1 > 1000000000) return q;
        long double frac = r - fl;
        if (frac < 1e-15L) return q;
        r = 1 / frac;
    }
    mpq_class q(h1, k1);
    q.canonicalize();
    return q;
}

}  // namespace

std::vector<Scalar> gaussian_rational_roots(const UPoly& p) {
    std::vector<Scalar> out;
    if (p.degree() < 1) return out;
    UPoly q, r;
    UPoly::divmod(p, UPoly::gcd(p, p.derivative()), q, r);
    q = q.monic();
    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            out.push_back(-q.coeffs()[0]);
            break;
        }
        bool found = false;
        for (const cld& z : numeric_roots(q)) {
            Scalar cand(rationalize(z.real()), rationalize(z.imag()));
            if (!q.eval(cand).is_zero()) continue;
            out.push_back(cand);
            UPoly quo, rem;
            UPoly::divmod(q, UPoly({-cand, Scalar(1)}), quo, rem);
            q = quo.monic();
            found = true;
            break;
        }
        if (!found) break;
    }
    return out;
}

}  // namespace cplv

#pragma once
#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace cplv {

// Gaussian rational re + im*i. mpq_class keeps both parts canonical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    // Accepts "3", "-1/2", "i", "-i", "2*i", "1/2-3/4*i".
    static Scalar parse(std::string_view s);
    static Scalar i() { return Scalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inv() const;  // throws DivisionByZero

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    Scalar pow(unsigned e) const;
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cplv

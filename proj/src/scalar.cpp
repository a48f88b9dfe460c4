#include "cplv/scalar.hpp"

#include <ostream>

#include "cplv/error.hpp"

namespace cplv {

namespace {

mpq_class parse_q(std::string s, std::string_view whole) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw Error(Errc::ParseError, "empty rational in '" + std::string(whole) + "'");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw Error(Errc::ParseError, "bad rational in '" + std::string(whole) + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw Error(Errc::ParseError, "bad rational in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar Scalar::parse(std::string_view in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(Errc::ParseError, "empty scalar");
    if (s.back() != 'i') return Scalar(parse_q(s, in));
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    // split at the last sign that is not the leading one
    size_t cut = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') {
            cut = k;
            break;
        }
    std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_part = cut == std::string::npos ? s : s.substr(cut);
    mpq_class im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_q(im_part, in);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_q(re_part, in);
    return Scalar(re, im);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero scalar");
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return q_str(re_);
    std::string ims;
    if (im_ == 1)
        ims = "i";
    else if (im_ == -1)
        ims = "-i";
    else
        ims = q_str(im_) + "*i";
    if (sgn(re_) == 0) return ims;
    if (ims[0] == '-') return q_str(re_) + ims;
    return q_str(re_) + "+" + ims;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cplv

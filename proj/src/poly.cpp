#include "cplv/poly.hpp"

#include "cplv/error.hpp"

namespace cplv {

namespace {
constexpr const char* kNames[kNumVars] = {"alpha", "beta", "gamma", "t", "xi", "nu"};
}

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view s) {
    for (int k = 0; k < kNumVars; ++k)
        if (s == kNames[k]) return static_cast<Var>(k);
    return std::nullopt;
}

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(Var v, unsigned e) {
    Exponents x{};
    x[static_cast<int>(v)] = static_cast<std::uint16_t>(e);
    return monomial(Scalar(1), x);
}

Poly Poly::monomial(const Scalar& c, const Exponents& e) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && cplv::total_degree(terms_.begin()->first) == 0); }

Scalar Poly::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Scalar() : it->second;
}

unsigned Poly::degree(Var v) const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<int>(v)]);
    return d;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : cplv::total_degree(lead_exp()); }

void Poly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int k = 0; k < kNumVars; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::derivative(Var v) const {
    int k = static_cast<int>(v);
    Poly r;
    for (auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents f = e;
        --f[k];
        r.add_term(f, c * Scalar(static_cast<long>(e[k])));
    }
    return r;
}

Poly Poly::subst(Var v, const Scalar& s) const {
    Assignment a{{v, s}};
    return subst(a);
}

Poly Poly::subst(const Assignment& a) const {
    Poly r;
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        Scalar coef = c;
        for (auto& [v, s] : a) {
            int k = static_cast<int>(v);
            if (f[k] == 0) continue;
            coef *= s.pow(f[k]);
            f[k] = 0;
        }
        r.add_term(f, coef);
    }
    return r;
}

Scalar Poly::eval(const Assignment& a) const {
    Poly r = subst(a);
    if (!r.is_constant()) {
        for (Var v : kAllVars)
            if (r.contains(v)) throw Error(Errc::MissingVariable, std::string("no value for ") + var_name(v));
    }
    return r.constant_term();
}

std::vector<Poly> Poly::coeffs(Var v) const {
    int k = static_cast<int>(v);
    std::vector<Poly> out(degree(v) + 1);
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        unsigned d = f[k];
        f[k] = 0;
        out[d].add_term(f, c);
    }
    return out;
}

Poly Poly::from_coeffs(Var v, const std::vector<Poly>& c) {
    Poly r;
    for (size_t d = 0; d < c.size(); ++d) r += c[d] * var(v, static_cast<unsigned>(d));
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::string mono;
        for (int k = 0; k < kNumVars; ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coef;
        bool neg = false;
        if (c.is_real()) {
            neg = sgn(c.re()) < 0;
            mpq_class m = abs(c.re());
            if (!(m == 1 && !mono.empty())) coef = m.get_str();
        } else if (sgn(c.re()) == 0) {
            neg = sgn(c.im()) < 0;
            Scalar m(0, abs(c.im()));
            coef = m.str();
        } else {
            coef = "(" + c.str() + ")";
        }
        std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
        if (first)
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    Poly r = a, q;
    const Exponents& lb = b.lead_exp();
    Scalar lc_inv = b.lead_coeff().inv();
    while (!r.is_zero()) {
        const Exponents& lr = r.lead_exp();
        Exponents e;
        for (int k = 0; k < kNumVars; ++k) {
            if (lr[k] < lb[k]) return std::nullopt;
            e[k] = lr[k] - lb[k];
        }
        Poly t = Poly::monomial(r.lead_coeff() * lc_inv, e);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.lead_coeff().inv();
}

Poly prem(const Poly& a, const Poly& b, Var v) {
    unsigned n = b.degree(v);
    std::vector<Poly> bc = b.coeffs(v);
    Poly lb = bc.back();
    Poly r = a;
    while (!r.is_zero() && r.degree(v) >= n) {
        unsigned d = r.degree(v);
        Poly lr = r.coeffs(v).back();
        r = lb * r - lr * Poly::var(v, d - n) * b;
    }
    return r;
}

Poly content(const Poly& p, Var v) {
    Poly g;
    for (auto& c : p.coeffs(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly primitive_part(const Poly& p, Var v) {
    if (p.is_zero()) return p;
    return *exact_div(p, content(p, v));
}

namespace {

int main_var(const Poly& a, const Poly& b) {
    for (int k = kNumVars - 1; k >= 0; --k)
        if (a.contains(static_cast<Var>(k)) || b.contains(static_cast<Var>(k))) return k;
    return -1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    int k = main_var(a, b);
    if (k < 0) return Poly(1);
    Var v = static_cast<Var>(k);
    if (!a.contains(v)) return gcd(a, content(b, v));
    if (!b.contains(v)) return gcd(content(a, v), b);
    Poly ca = content(a, v), cb = content(b, v);
    Poly c = gcd(ca, cb);
    Poly pa = *exact_div(a, ca), pb = *exact_div(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    Poly g;
    for (;;) {
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (!r.contains(v)) {
            g = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part(r, v);
    }
    return monic(c * primitive_part(g, v));
}

Poly resultant(const Poly& a, const Poly& b, Var v) {
    if (a.is_zero() || b.is_zero()) return Poly();
    unsigned m = a.degree(v), n = b.degree(v);
    if (m == 0) return a.pow(n);
    if (n == 0) return b.pow(m);
    std::vector<Poly> ac = a.coeffs(v), bc = b.coeffs(v);
    size_t N = m + n;
    std::vector<std::vector<Poly>> S(N, std::vector<Poly>(N));
    for (size_t r = 0; r < n; ++r)
        for (size_t d = 0; d <= m; ++d) S[r][r + (m - d)] = ac[d];
    for (size_t r = 0; r < m; ++r)
        for (size_t d = 0; d <= n; ++d) S[n + r][r + (n - d)] = bc[d];
    // Bareiss fraction-free elimination
    Poly prev(1);
    bool neg = false;
    for (size_t k = 0; k + 1 < N; ++k) {
        if (S[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < N && S[p][k].is_zero()) ++p;
            if (p == N) return Poly();
            std::swap(S[k], S[p]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j) S[i][j] = *exact_div(S[i][j] * S[k][k] - S[i][k] * S[k][j], prev);
            S[i][k] = Poly();
        }
        prev = S[k][k];
    }
    Poly det = S[N - 1][N - 1];
    return neg ? -det : det;
}

}  // namespace cplv

#include "cplv/algebra.hpp"

#include "cplv/error.hpp"
#include "cplv/roots.hpp"

namespace cplv {

namespace {

Vec unit(int n, int i) {
    Vec v(n);
    v[i] = RatFunc(1);
    return v;
}

Vec operator+(Vec a, const Vec& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

Vec operator-(Vec a, const Vec& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

// (x p y) q z - x p (y q z)
Vec mixed_assoc(const Product& p, const Product& q, const Vec& x, const Vec& y, const Vec& z) {
    return q.mul(p.mul(x, y), z) - p.mul(x, q.mul(y, z));
}

// associator cross terms of p+q
Vec cross(const Product& p, const Product& q, const Vec& x, const Vec& y, const Vec& z) {
    return mixed_assoc(p, q, x, y, z) + mixed_assoc(q, p, x, y, z);
}

template <class F>
bool all_triples(int n, F f) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!all_zero(f(unit(n, i), unit(n, j), unit(n, k)))) return false;
    return true;
}

bool mixed_pre_lie(const Product& p, const Product& q) {
    return all_triples(p.dim(), [&](const Vec& x, const Vec& y, const Vec& z) {
        return cross(p, q, x, y, z) - cross(p, q, y, x, z);
    });
}

bool mixed_associative(const Product& p, const Product& q) {
    return all_triples(p.dim(), [&](const Vec& x, const Vec& y, const Vec& z) { return cross(p, q, x, y, z); });
}

// (x q y) p z + (x p y) q z symmetric in y, z
bool mixed_right_commutative(const Product& p, const Product& q) {
    return all_triples(p.dim(), [&](const Vec& x, const Vec& y, const Vec& z) {
        return (p.mul(q.mul(x, y), z) + q.mul(p.mul(x, y), z)) - (p.mul(q.mul(x, z), y) + q.mul(p.mul(x, z), y));
    });
}

Matrix<Scalar> numeric_point(const Product& p, const Assignment& point) {
    int n = p.dim();
    Matrix<Scalar> m(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m(i * n + j, k) = p.at(i, j, k).eval(point);
    return m;
}

}  // namespace

bool all_zero(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool Product::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Product::basis_mul(int i, int j) const {
    Vec r(n_);
    for (int k = 0; k < n_; ++k) r[k] = at(i, j, k);
    return r;
}

Vec Product::mul(const Vec& x, const Vec& y) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            RatFunc xy = x[i] * y[j];
            for (int k = 0; k < n_; ++k)
                if (!at(i, j, k).is_zero()) r[k] += xy * at(i, j, k);
        }
    }
    return r;
}

Product Product::subst(const RatSubst& s) const {
    Product r(n_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k].subst(s);
    return r;
}

Product Product::subst(const Assignment& a) const {
    Product r(n_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k].subst(a);
    return r;
}

Product operator+(const Product& a, const Product& b) {
    Product r(a.n_);
    for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TwoProductAlgebra::TwoProductAlgebra(Product f, Product s) : first(std::move(f)), second(std::move(s)) {
    if (first.dim() != second.dim()) throw Error(Errc::UnsupportedDimension, "products of different dimension");
}

const char* variety_name(Variety v) {
    switch (v) {
        case Variety::CompatiblePreLie: return "CompatiblePreLie";
        case Variety::CompatibleCommAssoc: return "CompatibleCommAssoc";
        case Variety::CompatibleAssoc: return "CompatibleAssoc";
        case Variety::CompatibleNovikov: return "CompatibleNovikov";
    }
    return "?";
}

Variety variety_from_name(std::string_view s) {
    for (Variety v : kAllVarieties)
        if (s == variety_name(v)) return v;
    throw Error(Errc::UnknownVariety, std::string(s));
}

Vec defect_pre_lie(const Product& p, int i, int j, int k) {
    int n = p.dim();
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    return mixed_assoc(p, p, x, y, z) - mixed_assoc(p, p, y, x, z);
}

bool check_pre_lie(const Product& p) {
    int n = p.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!all_zero(defect_pre_lie(p, i, j, k))) return false;
    return true;
}

bool check_compatibility_pre_lie(const TwoProductAlgebra& a) { return mixed_pre_lie(a.first, a.second); }

bool check_commutative(const Product& p) {
    int n = p.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!(p.at(i, j, k) - p.at(j, i, k)).is_zero()) return false;
    return true;
}

bool check_associative(const Product& p) {
    return all_triples(p.dim(), [&](const Vec& x, const Vec& y, const Vec& z) { return mixed_assoc(p, p, x, y, z); });
}

bool check_right_commutative(const Product& p) {
    return all_triples(p.dim(), [&](const Vec& x, const Vec& y, const Vec& z) {
        return p.mul(p.mul(x, y), z) - p.mul(p.mul(x, z), y);
    });
}

bool check_novikov(const Product& p) { return check_pre_lie(p) && check_right_commutative(p); }

bool check_compatible_variety(const TwoProductAlgebra& a, Variety v) {
    const Product& p = a.first;
    const Product& q = a.second;
    Product s = p + q;
    switch (v) {
        case Variety::CompatiblePreLie:
            return check_pre_lie(p) && check_pre_lie(q) && mixed_pre_lie(p, q) && check_pre_lie(s);
        case Variety::CompatibleCommAssoc:
            return check_commutative(p) && check_commutative(q) && check_associative(p) && check_associative(q) &&
                   mixed_associative(p, q) && check_commutative(s) && check_associative(s);
        case Variety::CompatibleAssoc:
            return check_associative(p) && check_associative(q) && mixed_associative(p, q) && check_associative(s);
        case Variety::CompatibleNovikov:
            return check_novikov(p) && check_novikov(q) && mixed_pre_lie(p, q) && mixed_right_commutative(p, q) &&
                   check_novikov(s);
    }
    throw Error(Errc::UnknownVariety, "unhandled variety");
}

bool z2_membership(const Product& base, const Product& theta) {
    if (base.dim() != theta.dim()) throw Error(Errc::UnsupportedDimension, "z2 operands differ in dimension");
    return check_pre_lie(theta) && mixed_pre_lie(base, theta);
}

Product transport(const Product& p, const BasisChange& g) {
    int n = p.dim();
    if (g.rows() != n || g.cols() != n) throw Error(Errc::UnsupportedDimension, "basis change has wrong shape");
    auto ginv = inverse(g);
    if (!ginv) throw Error(Errc::SingularMatrix, "basis change is not invertible");
    std::vector<Vec> rows(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = g(i, j);
    Product r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = p.mul(rows[i], rows[j]);
            for (int k = 0; k < n; ++k) {
                RatFunc acc;
                for (int m = 0; m < n; ++m)
                    if (!v[m].is_zero() && !(*ginv)(m, k).is_zero()) acc += v[m] * (*ginv)(m, k);
                r.at(i, j, k) = acc;
            }
        }
    return r;
}

TwoProductAlgebra transport(const TwoProductAlgebra& a, const BasisChange& g) {
    return {transport(a.first, g), transport(a.second, g)};
}

int derivation_dimension(const TwoProductAlgebra& a, const Assignment& point) {
    int n = a.dim();
    int N = n * n;
    std::vector<Matrix<Scalar>> cs = {numeric_point(a.first, point), numeric_point(a.second, point)};
    Matrix<Scalar> sys(2 * n * n * n, N);
    int row = 0;
    // unknown d(i,l) sits in column i*n+l
    for (auto& c : cs)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k, ++row) {
                    for (int m = 0; m < n; ++m) sys(row, m * n + k) += c(i * n + j, m);
                    for (int l = 0; l < n; ++l) {
                        sys(row, i * n + l) -= c(l * n + j, k);
                        sys(row, j * n + l) -= c(i * n + l, k);
                    }
                }
    return N - rank(sys);
}

bool has_zero_mult_line(const TwoProductAlgebra& a, const Assignment& point) {
    if (a.dim() != 2) throw Error(Errc::UnsupportedDimension, "zero-multiplication line test needs dimension 2");
    std::vector<Matrix<Scalar>> cs = {numeric_point(a.first, point), numeric_point(a.second, point)};
    // v = e2
    bool e2 = true;
    for (auto& c : cs)
        for (int k = 0; k < 2; ++k) e2 = e2 && c(3, k).is_zero();
    if (e2) return true;
    // v = e1 + s e2: v.v = c11 + s (c12 + c21) + s^2 c22
    UPoly g;
    for (auto& c : cs)
        for (int k = 0; k < 2; ++k) {
            UPoly q({c(0, k), c(1, k) + c(2, k), c(3, k)});
            g = UPoly::gcd(g, q);
        }
    return g.is_zero() || g.degree() >= 1;
}

std::string table_text(const Product& p, std::string_view sym) {
    std::string out;
    int n = p.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string rhs;
            for (int k = 0; k < n; ++k) {
                const RatFunc& c = p.at(i, j, k);
                if (c.is_zero()) continue;
                std::string e = "e" + std::to_string(k + 1);
                std::string cs = c.str();
                std::string term;
                if (cs == "1")
                    term = e;
                else if (cs == "-1")
                    term = "-" + e;
                else if (c.num().terms().size() == 1 && c.den().is_constant())
                    term = cs + " " + e;
                else
                    term = "(" + cs + ") " + e;
                if (!rhs.empty()) rhs += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
                else rhs = term;
            }
            if (rhs.empty()) continue;
            if (!out.empty()) out += ", ";
            out += "e" + std::to_string(i + 1) + std::string(sym) + "e" + std::to_string(j + 1) + " = " + rhs;
        }
    return out.empty() ? "0" : out;
}

}  // namespace cplv

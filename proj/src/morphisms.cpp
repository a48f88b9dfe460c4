#include "cplv/morphisms.hpp"

#include "cplv/error.hpp"
#include "cplv/roots.hpp"

namespace cplv {

bool is_automorphism(const TwoProductAlgebra& a, const BasisChange& g) { return transport(a, g) == a; }

bool verify_isomorphism(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const BasisChange& g) {
    if (a.dim() != b.dim()) return false;
    return transport(a, g) == b;
}

namespace {

bool is_numeric(const TwoProductAlgebra& a) {
    for (const Product* p : {&a.first, &a.second})
        for (auto& c : p->entries())
            if (!c.is_constant()) return false;
    return true;
}

BasisChange fill(const BasisChange& tmpl, const Assignment& vals) {
    return tmpl.map([&](const RatFunc& f) { return f.subst(vals); });
}

bool side_ok(const AutFamily& fam, const Assignment& vals) {
    try {
        return all_satisfied(fam.side, vals);
    } catch (const Error&) {
        return false;
    }
}

std::optional<BasisChange> try_point(const AutFamily& fam, const BasisChange& tmpl, const Assignment& vals,
                                     const TwoProductAlgebra& a, const TwoProductAlgebra& b) {
    if (!side_ok(fam, vals)) return std::nullopt;
    BasisChange g = fill(tmpl, vals);
    if (determinant(g).is_zero()) return std::nullopt;
    if (verify_isomorphism(a, b, g)) return g;
    return std::nullopt;
}

std::vector<Scalar> roots_or_free(const std::vector<Poly>& eqs, Var v, bool& free) {
    UPoly g;
    for (auto& p : eqs) g = UPoly::gcd(g, UPoly::from_poly(p, v));
    free = g.is_zero();
    if (free || g.degree() < 1) return {};
    return gaussian_rational_roots(g);
}

const std::vector<Scalar>& trial_values() {
    static const std::vector<Scalar> vals = {Scalar(1), Scalar(-1), Scalar(2), Scalar(mpq_class(1, 2)), Scalar(3)};
    return vals;
}

std::vector<Poly> split(const std::vector<Poly>& eqs, Var v, std::vector<Poly>& with_v) {
    std::vector<Poly> without;
    for (auto& p : eqs) (p.contains(v) ? with_v : without).push_back(p);
    return without;
}

}  // namespace

std::optional<BasisChange> search_isomorphism(const Catalog& cat, const std::string& base, const Assignment& base_params,
                                              const TwoProductAlgebra& a, const TwoProductAlgebra& b) {
    const FamilySpec& bf = cat.family(base);
    Product bp = bf.algebra.second.subst(base_params);
    if (!(a.first == bp) || !(b.first == bp))
        throw Error(Errc::BaseMismatch, "first products do not match base " + base);
    if (!is_numeric(a) || !is_numeric(b)) throw Error(Errc::MissingVariable, "search needs numeric algebras");
    AutFamily fam = cat.automorphism_family(base, base_params);

    for (const BasisChange& tmpl : fam.templates) {
        bool has_xi = false, has_nu = false;
        for (int i = 0; i < tmpl.rows(); ++i)
            for (int j = 0; j < tmpl.cols(); ++j) {
                has_xi = has_xi || tmpl(i, j).contains(Var::xi);
                has_nu = has_nu || tmpl(i, j).contains(Var::nu);
            }
        if (!has_xi && !has_nu) {
            if (auto g = try_point(fam, tmpl, {}, a, b)) return g;
            continue;
        }
        // numerators of transport(a, g(xi, nu)) - b
        TwoProductAlgebra ta;
        try {
            ta = transport(a, tmpl);
        } catch (const Error&) {
            continue;
        }
        std::vector<Poly> eqs;
        bool inconsistent = false;
        for (auto [p, q] : {std::pair{&ta.first, &b.first}, std::pair{&ta.second, &b.second}})
            for (size_t k = 0; k < p->entries().size(); ++k) {
                RatFunc d = p->entries()[k] - q->entries()[k];
                if (d.is_zero()) continue;
                if (d.num().is_constant()) inconsistent = true;
                eqs.push_back(d.num());
            }
        if (inconsistent) continue;

        // candidate xi values: common roots of nu-free equations and of resultants
        std::vector<Scalar> xis;
        if (has_xi) {
            std::vector<Poly> with_nu;
            std::vector<Poly> uni = split(eqs, Var::nu, with_nu);
            for (size_t i = 0; i < with_nu.size(); ++i)
                for (size_t j = i + 1; j < with_nu.size(); ++j) {
                    Poly r = resultant(with_nu[i], with_nu[j], Var::nu);
                    if (!r.is_zero()) uni.push_back(r);
                }
            bool free = false;
            xis = roots_or_free(uni, Var::xi, free);
            if (free) xis = trial_values();
        } else {
            xis = {Scalar(0)};
        }
        for (const Scalar& x : xis) {
            Assignment at;
            if (has_xi) at[Var::xi] = x;
            std::vector<Poly> rest;
            bool dead = false;
            for (auto& p : eqs) {
                Poly q = p.subst(at);
                if (q.is_zero()) continue;
                if (q.is_constant()) dead = true;
                rest.push_back(q);
            }
            if (dead) continue;
            std::vector<Scalar> nus = {Scalar(0)};
            if (has_nu) {
                bool free = false;
                nus = roots_or_free(rest, Var::nu, free);
                if (free) nus = {Scalar(0), Scalar(1)};
            }
            for (const Scalar& n : nus) {
                Assignment full = at;
                if (has_nu) full[Var::nu] = n;
                if (auto g = try_point(fam, tmpl, full, a, b)) return g;
            }
        }
    }
    return std::nullopt;
}

}  // namespace cplv

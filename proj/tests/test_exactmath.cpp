#include <doctest.h>

#include "cplv/error.hpp"
#include "cplv/ratfunc.hpp"
#include "cplv/roots.hpp"
#include "cplv/sampling.hpp"

using namespace cplv;

namespace {

RatFunc rf(const char* s) { return RatFunc::parse(s); }

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no cplv::Error thrown");
    return Errc::BadConfig;
}

Poly random_poly(Rng& rng, std::initializer_list<Var> vars, int terms) {
    Poly p;
    for (int k = 0; k < terms; ++k) {
        Poly m(rng.scalar());
        for (Var v : vars) m *= Poly::var(v, static_cast<unsigned>(rng.range(0, 2)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("scalar parse and print") {
    CHECK(Scalar::parse("1/2-3/4*i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("2*i").str() == "2*i");
    CHECK(Scalar::parse("6/4").str() == "3/2");
    CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
    CHECK(code_of([] { Scalar(0).inv(); }) == Errc::DivisionByZero);
}

TEST_CASE("field axioms on 1000 random triples") {
    Rng rng(7);
    for (int n = 0; n < 1000; ++n) {
        Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
    }
}

TEST_CASE("polynomials are canonical") {
    Rng rng(11);
    for (int n = 0; n < 200; ++n) {
        Poly f = random_poly(rng, {Var::alpha, Var::beta}, 3), g = random_poly(rng, {Var::beta, Var::t}, 3),
             h = random_poly(rng, {Var::alpha, Var::t}, 2);
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE((f - f).is_zero());
    }
}

TEST_CASE("gcd and resultant") {
    Poly a = Poly::var(Var::alpha), b = Poly::var(Var::beta);
    Poly g = gcd((a - b) * (a + b), (a - b) * (a + Poly(2)));
    CHECK(monic(g) == monic(a - b));
    // Res_x(x - a, x - b) = a - b up to sign
    Poly r = resultant(Poly::var(Var::t) - a, Poly::var(Var::t) - b, Var::t);
    CHECK((r == a - b || r == b - a));
}

TEST_CASE("reduce(f g / g) = f") {
    Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        Poly f = random_poly(rng, {Var::alpha, Var::t}, 3);
        Poly g = random_poly(rng, {Var::alpha, Var::beta, Var::t}, 3);
        if (g.is_zero()) continue;
        REQUIRE(RatFunc(f * g, g) == RatFunc(f));
    }
}

TEST_CASE("ratfunc_eval") {
    Assignment two{{Var::alpha, Scalar(2)}, {Var::beta, Scalar(2)}};
    CHECK(ratfunc_eval(rf("(alpha-beta)/1"), two).is_zero());
    CHECK(ratfunc_eval(rf("(2*alpha+t)*beta/(2*beta+t)"), {{Var::alpha, 1}, {Var::beta, 1}, {Var::t, 0}}) == Scalar(1));
    CHECK(code_of([] { ratfunc_eval(rf("1/t"), {{Var::t, 0}}); }) == Errc::DenominatorVanishes);
    CHECK(code_of([] { ratfunc_eval(rf("alpha+beta"), {{Var::alpha, 1}}); }) == Errc::MissingVariable);
}

TEST_CASE("ratfunc_eval against brute force on an integer grid") {
    RatFunc f = rf("(2*alpha+t)*beta/(2*beta+t)");
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long t = -3; t <= 3; ++t) {
                if (2 * b + t == 0) continue;
                mpq_class want(mpz_class((2 * a + t) * b), mpz_class(2 * b + t));
                want.canonicalize();
                REQUIRE(ratfunc_eval(f, {{Var::alpha, a}, {Var::beta, b}, {Var::t, t}}) == Scalar(want));
            }
}

TEST_CASE("limit_at_zero") {
    CHECK(limit_at_zero(rf("(t^2+alpha*t)/t")) == rf("alpha"));
    CHECK(limit_at_zero(rf("beta*t/(2*beta+t)")).is_zero());
    CHECK(code_of([] { limit_at_zero(rf("1/t")); }) == Errc::NoFiniteLimit);
    CHECK(code_of([] { limit_at_zero(rf("alpha/(t*beta+t^2)")); }) == Errc::NoFiniteLimit);
    CHECK(rf("t^-1") == rf("1/t"));
}

TEST_CASE("limit agrees with evaluation at small t") {
    Rng rng(5);
    int checked = 0;
    for (int n = 0; n < 300 && checked < 50; ++n) {
        Poly p = random_poly(rng, {Var::alpha, Var::t}, 3), q = random_poly(rng, {Var::alpha, Var::t}, 3);
        if (q.is_zero()) continue;
        RatFunc f(p, q);
        RatFunc lim;
        try {
            lim = limit_at_zero(f);
        } catch (const Error&) {
            continue;
        }
        Assignment a{{Var::alpha, rng.nonzero_scalar()}};
        Scalar L;
        try {
            L = lim.eval(a);
        } catch (const Error&) {
            continue;
        }
        mpq_class prev = -1;
        bool ok = true;
        mpz_class tenth = 1000;
        for (int k = 1; k <= 3 && ok; ++k, tenth *= 10) {
            Assignment at = a;
            at[Var::t] = Scalar(mpq_class(mpz_class(1), tenth));
            Scalar v;
            try {
                v = f.eval(at);
            } catch (const Error&) {
                ok = false;
                break;
            }
            mpq_class d = (v - L).norm();
            if (prev >= 0) REQUIRE(d <= prev);
            prev = d;
        }
        if (ok) ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("ratfunc_is_zero") {
    CHECK(ratfunc_is_zero(rf("(alpha+beta)-(beta+alpha)")));
    CHECK(ratfunc_is_zero(rf("(gamma+beta-alpha)+alpha-(gamma+beta)")));
    CHECK_FALSE(ratfunc_is_zero(rf("alpha-beta")));
}

TEST_CASE("simultaneous substitution") {
    RatFunc f = rf("alpha*beta/(alpha+1)");
    RatFunc g = f.subst(RatSubst{{Var::alpha, rf("beta")}, {Var::beta, rf("alpha")}});
    CHECK(g == rf("alpha*beta/(beta+1)"));
    CHECK(code_of([] { rf("1/(alpha-1)").subst(Assignment{{Var::alpha, 1}}); }) == Errc::DenominatorVanishes);
}

TEST_CASE("gaussian rational roots") {
    // (x - 1/2)(x + i)(x^2 + 2): only two roots in Q(i)
    UPoly p = UPoly::from_poly(
        (Poly::var(Var::xi) - Poly(Scalar(mpq_class(1, 2)))) * (Poly::var(Var::xi) + Poly(Scalar::i())) * (Poly::var(Var::xi, 2) + Poly(2)),
        Var::xi);
    auto r = gaussian_rational_roots(p);
    REQUIRE(r.size() == 2);
    for (auto& x : r) CHECK(p.eval(x).is_zero());
}

#include "cplv/sampling.hpp"

#include "cplv/error.hpp"

namespace cplv {

Scalar Rng::scalar() {
    auto q = [&] {
        mpq_class v(range(-9, 9), range(1, 4));
        v.canonicalize();
        return v;
    };
    mpq_class re = q();
    mpq_class im = range(0, 2) == 0 ? q() : mpq_class(0);
    return Scalar(re, im);
}

Scalar Rng::nonzero_scalar() {
    for (;;) {
        Scalar s = scalar();
        if (!s.is_zero()) return s;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view item) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : item) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    // splitmix64 finaliser over the combination
    std::uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Assignment random_point(const std::vector<Var>& params, const std::vector<Constraint>& constraints, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        Assignment a;
        for (Var v : params) a[v] = rng.scalar();
        if (all_satisfied(constraints, a)) return a;
    }
    throw Error(Errc::BadConfig, "could not sample an admissible parameter point");
}

Assignment random_point(const FamilySpec& f, Rng& rng) { return random_point(f.params, f.constraints, rng); }

BasisChange random_invertible(int n, Rng& rng, bool upper) {
    for (;;) {
        BasisChange m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (upper && j < i) continue;
                m(i, j) = RatFunc(i == j ? rng.nonzero_scalar() : rng.scalar());
            }
        if (!determinant(m).is_zero()) return m;
    }
}

}  // namespace cplv

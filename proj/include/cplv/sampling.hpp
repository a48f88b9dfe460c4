#pragma once
#include <cstdint>
#include <random>
#include <string_view>

#include "cplv/catalog.hpp"

namespace cplv {

// Deterministic source built on raw mt19937_64 output, so streams are
// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t next() { return g_(); }
    // uniform-ish integer in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    // small Gaussian rational, imaginary part present about a third of the time
    Scalar scalar();
    Scalar nonzero_scalar();

private:
    std::mt19937_64 g_;
};

// independent stream per named item
std::uint64_t derive_seed(std::uint64_t seed, std::string_view item);

// random point satisfying every constraint; BadConfig after too many rejections
Assignment random_point(const std::vector<Var>& params, const std::vector<Constraint>& constraints, Rng& rng);
Assignment random_point(const FamilySpec& f, Rng& rng);

// invertible constant matrix; upper = zero below the diagonal
BasisChange random_invertible(int n, Rng& rng, bool upper = false);

}  // namespace cplv

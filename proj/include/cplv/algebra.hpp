#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplv/linalg.hpp"

namespace cplv {

using Vec = std::vector<RatFunc>;

// e_i . e_j = sum_k c(i,j,k) e_k, indices 0-based.
class Product {
public:
    Product() = default;
    explicit Product(int n) : n_(n), c_(static_cast<size_t>(n) * n * n) {}

    int dim() const { return n_; }
    RatFunc& at(int i, int j, int k) { return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const RatFunc& at(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const std::vector<RatFunc>& entries() const { return c_; }

    bool is_zero() const;
    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis_mul(int i, int j) const;

    Product subst(const RatSubst& s) const;
    Product subst(const Assignment& a) const;

    friend Product operator+(const Product& a, const Product& b);
    friend bool operator==(const Product& a, const Product& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    int n_ = 0;
    std::vector<RatFunc> c_;
};

// (first, second) = (., *)
struct TwoProductAlgebra {
    Product first, second;

    TwoProductAlgebra() = default;
    TwoProductAlgebra(Product f, Product s);
    int dim() const { return first.dim(); }
    TwoProductAlgebra subst(const RatSubst& s) const { return {first.subst(s), second.subst(s)}; }
    TwoProductAlgebra subst(const Assignment& a) const { return {first.subst(a), second.subst(a)}; }
    friend bool operator==(const TwoProductAlgebra& a, const TwoProductAlgebra& b) {
        return a.first == b.first && a.second == b.second;
    }
};

// Row i holds E_i in the old basis.
using BasisChange = Matrix<RatFunc>;

enum class Variety { CompatiblePreLie, CompatibleCommAssoc, CompatibleAssoc, CompatibleNovikov };
constexpr Variety kAllVarieties[] = {Variety::CompatiblePreLie, Variety::CompatibleCommAssoc, Variety::CompatibleAssoc,
                                     Variety::CompatibleNovikov};
const char* variety_name(Variety v);
Variety variety_from_name(std::string_view s);  // UnknownVariety

bool all_zero(const Vec& v);

Vec defect_pre_lie(const Product& p, int i, int j, int k);
bool check_pre_lie(const Product& p);
bool check_compatibility_pre_lie(const TwoProductAlgebra& a);
bool check_commutative(const Product& p);
bool check_associative(const Product& p);
bool check_right_commutative(const Product& p);
bool check_novikov(const Product& p);
bool check_compatible_variety(const TwoProductAlgebra& a, Variety v);
bool z2_membership(const Product& base, const Product& theta);

TwoProductAlgebra transport(const TwoProductAlgebra& a, const BasisChange& g);  // SingularMatrix
Product transport(const Product& p, const BasisChange& g);

int derivation_dimension(const TwoProductAlgebra& a, const Assignment& point = {});
bool has_zero_mult_line(const TwoProductAlgebra& a, const Assignment& point = {});

std::string table_text(const Product& p, std::string_view sym);

}  // namespace cplv

#pragma once
#include <optional>

#include "cplv/catalog.hpp"

namespace cplv {

bool is_automorphism(const TwoProductAlgebra& a, const BasisChange& g);
bool verify_isomorphism(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const BasisChange& g);

// Looks for g in the automorphism family of the base with transport(a, g) == b.
// a and b must have constant entries and share the base product as their first
// product (BaseMismatch otherwise). nullopt means nothing inside the family.
std::optional<BasisChange> search_isomorphism(const Catalog& cat, const std::string& base, const Assignment& base_params,
                                              const TwoProductAlgebra& a, const TwoProductAlgebra& b);

}  // namespace cplv

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/group.hpp"

namespace sbrace {

// Explicit isomorphism A -> Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... | d_r.
struct AbelianDecomposition {
  std::vector<std::int64_t> factors;
  std::vector<std::vector<std::int64_t>> coords;  // element -> coordinates
  std::vector<Elem> basis;                        // basis[j] has coordinates e_j

  std::int64_t exponent() const { return factors.empty() ? 1 : factors.back(); }
};

AbelianDecomposition decompose_abelian(const GroupTable& a);

// Z/m_1 x ... x Z/m_r with mixed-radix indices (last factor fastest).
GroupTable abelian_group(std::span<const std::int64_t> factors);
std::vector<std::int64_t> mixed_radix_digits(Elem x, std::span<const std::int64_t> factors);
Elem mixed_radix_index(std::span<const std::int64_t> digits, std::span<const std::int64_t> factors);

GroupTable cyclic_group(std::size_t n);

}  // namespace sbrace

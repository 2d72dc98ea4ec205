#pragma once

#include <string>
#include <vector>

#include "core/group.hpp"

namespace sbrace {

struct CatalogGroup {
  std::string tag;
  GroupTable group;
};

// One group per isomorphism type of the given order (order <= 16).
std::vector<CatalogGroup> groups_of_order(std::size_t order);
std::vector<CatalogGroup> build_catalog(std::size_t max_order);
// Catalog tag of g, or empty when the order is outside the catalog.
std::string identify_group(const GroupTable& g);

GroupTable dihedral_group(std::size_t m);  // order 2m
GroupTable dicyclic_group(std::size_t m);  // order 4m
// N x| Z_k with the generator of Z_k acting by phi (phi^k = id).
GroupTable semidirect_cyclic(const GroupTable& n, std::size_t k, const std::vector<Elem>& phi);

}  // namespace sbrace

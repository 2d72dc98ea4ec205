#include "core/catalog.hpp"

#include "core/abelian.hpp"
#include "core/error.hpp"

namespace sbrace {

namespace {

std::vector<Elem> times(std::size_t n, std::size_t r) {
  std::vector<Elem> phi(n);
  for (Elem x = 0; x < n; ++x) phi[x] = static_cast<Elem>((x * r) % n);
  return phi;
}

GroupTable abel(std::initializer_list<std::int64_t> f) {
  std::vector<std::int64_t> v(f);
  return abelian_group(v);
}

GroupTable pauli_group() {
  // central product C4 o D8: (C4 x D8) / <(2, z)>
  GroupTable d8 = dihedral_group(4);
  GroupTable p = direct_product(cyclic_group(4), d8);
  Subset z(p.order());
  z.insert(0);
  z.insert(2 * 8 + 2);
  return quotient_group(p, z).group;
}

GroupTable c4c2_by_c2() {
  // <a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, bc = cb, c a c = ab>
  GroupTable n = abel({4, 2});
  std::vector<Elem> phi(8);
  for (Elem x = 0; x < 8; ++x) {
    std::int64_t ca = x / 2, cb = x % 2;
    phi[x] = static_cast<Elem>(ca * 2 + (cb + ca) % 2);
  }
  return semidirect_cyclic(n, 2, phi);
}

GroupTable a4() {
  GroupTable v = abel({2, 2});
  return semidirect_cyclic(v, 3, {0, 2, 3, 1});
}

}  // namespace

GroupTable semidirect_cyclic(const GroupTable& n, std::size_t k, const std::vector<Elem>& phi) {
  const std::size_t m = n.order(), order = m * k;
  std::vector<std::vector<Elem>> pw(k, std::vector<Elem>(m));
  for (Elem x = 0; x < m; ++x) pw[0][x] = x;
  for (std::size_t j = 1; j < k; ++j)
    for (Elem x = 0; x < m; ++x) pw[j][x] = phi[pw[j - 1][x]];
  for (Elem x = 0; x < m; ++x)
    if (phi[pw[k - 1][x]] != x) fail(ErrorCode::InvalidArgument, "phi^k is not the identity");
  // (x, j) -> j*m + x
  std::vector<Elem> t(order * order);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) {
      Elem xa = a % m, ja = a / m, xb = b % m, jb = b / m;
      Elem x = n.mul(xa, pw[ja][xb]);
      Elem j = static_cast<Elem>((ja + jb) % k);
      t[a * order + b] = j * static_cast<Elem>(m) + x;
    }
  return GroupTable::from_table(order, std::move(t));
}

GroupTable dihedral_group(std::size_t m) { return semidirect_cyclic(cyclic_group(m), 2, times(m, m - 1)); }

GroupTable dicyclic_group(std::size_t m) {
  const std::size_t r = 2 * m, order = 4 * m;
  // a^i x^j -> j*2m + i, with x a x^-1 = a^-1 and x^2 = a^m
  std::vector<Elem> t(order * order);
  for (Elem p = 0; p < order; ++p)
    for (Elem q = 0; q < order; ++q) {
      std::size_t i1 = p % r, j1 = p / r, i2 = q % r, j2 = q / r;
      std::size_t i, j;
      if (j1 == 0) {
        i = (i1 + i2) % r;
        j = j2;
      } else if (j2 == 0) {
        i = (i1 + r - i2) % r;
        j = 1;
      } else {
        i = (i1 + r - i2 + m) % r;
        j = 0;
      }
      t[p * order + q] = static_cast<Elem>(j * r + i);
    }
  return GroupTable::from_table(order, std::move(t));
}

std::vector<CatalogGroup> groups_of_order(std::size_t order) {
  std::vector<CatalogGroup> g;
  auto add = [&](const char* tag, GroupTable t) { g.push_back({tag, std::move(t)}); };
  switch (order) {
    case 1: add("C1", cyclic_group(1)); break;
    case 2: add("C2", cyclic_group(2)); break;
    case 3: add("C3", cyclic_group(3)); break;
    case 4:
      add("C4", cyclic_group(4));
      add("C2xC2", abel({2, 2}));
      break;
    case 5: add("C5", cyclic_group(5)); break;
    case 6:
      add("C6", cyclic_group(6));
      add("S3", dihedral_group(3));
      break;
    case 7: add("C7", cyclic_group(7)); break;
    case 8:
      add("C8", cyclic_group(8));
      add("C4xC2", abel({4, 2}));
      add("D8", dihedral_group(4));
      add("Q8", dicyclic_group(2));
      add("C2xC2xC2", abel({2, 2, 2}));
      break;
    case 9:
      add("C9", cyclic_group(9));
      add("C3xC3", abel({3, 3}));
      break;
    case 10:
      add("C10", cyclic_group(10));
      add("D10", dihedral_group(5));
      break;
    case 11: add("C11", cyclic_group(11)); break;
    case 12:
      add("C3:C4", semidirect_cyclic(cyclic_group(3), 4, times(3, 2)));
      add("C12", cyclic_group(12));
      add("A4", a4());
      add("D12", dihedral_group(6));
      add("C6xC2", abel({6, 2}));
      break;
    case 13: add("C13", cyclic_group(13)); break;
    case 14:
      add("C14", cyclic_group(14));
      add("D14", dihedral_group(7));
      break;
    case 15: add("C15", cyclic_group(15)); break;
    case 16:
      add("C16", cyclic_group(16));
      add("C4xC4", abel({4, 4}));
      add("(C4xC2):C2", c4c2_by_c2());
      add("C4:C4", semidirect_cyclic(cyclic_group(4), 4, times(4, 3)));
      add("C8xC2", abel({8, 2}));
      add("M16", semidirect_cyclic(cyclic_group(8), 2, times(8, 5)));
      add("D16", dihedral_group(8));
      add("QD16", semidirect_cyclic(cyclic_group(8), 2, times(8, 3)));
      add("Q16", dicyclic_group(4));
      add("C4xC2xC2", abel({4, 2, 2}));
      add("D8xC2", direct_product(dihedral_group(4), cyclic_group(2)));
      add("Q8xC2", direct_product(dicyclic_group(2), cyclic_group(2)));
      add("C4oD8", pauli_group());
      add("C2^4", abel({2, 2, 2, 2}));
      break;
    default: fail(ErrorCode::InvalidArgument, "catalog covers orders 1..16");
  }
  return g;
}

std::vector<CatalogGroup> build_catalog(std::size_t max_order) {
  std::vector<CatalogGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto& g : groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

std::string identify_group(const GroupTable& g) {
  if (g.order() > 16) return {};
  for (auto& c : groups_of_order(g.order()))
    if (find_isomorphism(g, c.group)) return c.tag;
  fail(ErrorCode::InternalDisagreement, "group missing from catalog");
}

}  // namespace sbrace

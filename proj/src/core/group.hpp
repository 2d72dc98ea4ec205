#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/subset.hpp"

namespace sbrace {

inline constexpr Elem kNone = static_cast<Elem>(-1);

// Finite group on {0..n-1} with identity 0. Tables are stored densely; a
// multiplication callback can stand in for very large groups.
class GroupTable {
 public:
  using MulFn = std::function<Elem(Elem, Elem)>;

  GroupTable() = default;

  // Checks identity at 0, the Latin property and associativity.
  static GroupTable from_table(std::size_t n, std::vector<Elem> table);
  // For tables that are groups by construction.
  static GroupTable trusted(std::size_t n, std::vector<Elem> table);
  static GroupTable lazy(std::size_t n, MulFn mul, bool validate);

  std::size_t order() const { return n_; }
  bool is_dense() const { return !lazy_; }
  Elem mul(Elem a, Elem b) const { return lazy_ ? lazy_(a, b) : table_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  Elem comm(Elem a, Elem b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  Elem power(Elem a, long long k) const;
  std::size_t elem_order(Elem a) const;
  bool is_abelian() const;
  // Dense row-major table; materialises lazy groups on demand.
  std::vector<Elem> table() const;

 private:
  void build_inverses();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  MulFn lazy_;
  std::vector<Elem> inv_;
};

// Check only, for callers that want the failing reason without constructing.
void validate_group(std::size_t n, std::span<const Elem> table);

// Map between finite index sets; map[i] is the image of i.
struct Bijection {
  std::size_t codomain = 0;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_bijective() const;
  Bijection inverse() const;
  static Bijection identity(std::size_t n);
};

// Generated subgroup, optionally its normal closure.
Subset generated_subgroup(const GroupTable& g, std::span<const Elem> seeds, bool normal_closure = false);
Subset generated_subgroup(const GroupTable& g, const Subset& seeds, bool normal_closure = false);
// Greedy generating set of a subgroup, at most log2|h| elements.
std::vector<Elem> small_generating_set(const GroupTable& g, const Subset& h);
bool is_subgroup(const GroupTable& g, const Subset& s);
bool is_normal(const GroupTable& g, const Subset& h);
Subset center(const GroupTable& g);
// [H,K]; when K is normal only generators are paired.
Subset commutator_subgroup(const GroupTable& g, const Subset& h, const Subset& k);
Subset dot_product_set(const GroupTable& g, const Subset& h, const Subset& k);  // HK as a set

enum class GroupSeriesKind { LowerCentral, UpperCentral, Derived };

// Terms until stabilisation. Lower central and derived start at G,
// upper central at 1.
std::vector<Subset> group_series(const GroupTable& g, GroupSeriesKind kind);
Subset lower_central_term(const GroupTable& g, std::size_t n);  // gamma_n, gamma_1 = G
Subset upper_central_term(const GroupTable& g, std::size_t n);  // Z_n, Z_0 = 1

struct Quotient {
  GroupTable group;
  std::vector<Elem> projection;  // element -> coset index
  std::vector<Elem> reps;        // coset index -> least element
};

Quotient quotient_group(const GroupTable& g, const Subset& n);
GroupTable subgroup_table(const GroupTable& g, const Subset& h, std::vector<Elem>* members = nullptr);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);  // (x,y) -> x*|b|+y

bool is_homomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> map);

// Extends gens[i] -> imgs[i] to a homomorphism on <gens>. Fills `map` (size
// |g|, kNone outside the generated subgroup). Returns false on inconsistency
// or, when `injective`, on a collision.
bool extend_homomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> gens,
                         std::span<const Elem> imgs, std::vector<Elem>& map, bool injective);

// Visits every isomorphism g -> h until the visitor returns false.
void for_each_isomorphism(const GroupTable& g, const GroupTable& h,
                          const std::function<bool(const Bijection&)>& visit);
std::optional<Bijection> find_isomorphism(const GroupTable& g, const GroupTable& h);
std::vector<Bijection> automorphisms(const GroupTable& g);

struct GroupIsoclinism {
  std::size_t n = 1;
  Bijection alpha;                 // on quotient indices of G/Z_n -> H/Z_n
  std::vector<Elem> beta_domain;   // sorted elements of gamma_{n+1}(G)
  std::vector<Elem> beta_image;    // matching elements of gamma_{n+1}(H)
};

// alpha ranges over isomorphisms of the central quotients; beta is propagated
// along the right-nested commutator word and checked.
std::optional<GroupIsoclinism> group_n_isoclinic(const GroupTable& g, const GroupTable& h, std::size_t n);

}  // namespace sbrace

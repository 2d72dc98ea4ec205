#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "core/group.hpp"

namespace sbrace {

// Finite skew left brace (A, ., o) on {0..n-1}; both identities are 0.
class SkewBrace {
 public:
  SkewBrace() = default;

  // Validates both groups and the brace axiom.
  static SkewBrace from_tables(std::size_t n, std::vector<Elem> dot, std::vector<Elem> circ);
  static SkewBrace from_groups(GroupTable dot, GroupTable circ, bool validate);

  std::size_t order() const { return dot_.order(); }
  const GroupTable& dot() const { return dot_; }
  const GroupTable& circ() const { return circ_; }

  Elem mul(Elem a, Elem b) const { return dot_.mul(a, b); }
  Elem cmul(Elem a, Elem b) const { return circ_.mul(a, b); }
  Elem dinv(Elem a) const { return dot_.inv(a); }
  Elem cinv(Elem a) const { return circ_.inv(a); }
  // lambda_a(b) = a^-1 (a o b)
  Elem lambda(Elem a, Elem b) const { return lam_[a * order() + b]; }
  // a * b = lambda_a(b) b^-1
  Elem star(Elem a, Elem b) const { return dot_.mul(lambda(a, b), dot_.inv(b)); }
  Elem comm_dot(Elem a, Elem b) const { return dot_.comm(a, b); }
  Elem comm_circ(Elem a, Elem b) const { return circ_.comm(a, b); }

 private:
  GroupTable dot_, circ_;
  std::vector<Elem> lam_;
};

// First (a, b, c) with a o (b c) != (a o b) a^-1 (a o c), if any.
std::optional<std::array<Elem, 3>> brace_axiom_witness(const GroupTable& dot, const GroupTable& circ);

SkewBrace trivial_brace(const GroupTable& g);         // a o b = a b
SkewBrace almost_trivial_brace(const GroupTable& g);  // a o b = b a
SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b);  // (x,y) -> x*|b|+y
// a o b = a lambda_a(b) for a map lambda: A -> Aut(A, .), given as n x n table.
SkewBrace brace_from_lambda(const GroupTable& dot, std::span<const Elem> lambda, bool validate);

struct SubsetClass {
  bool dot_subgroup = false;
  bool circ_subgroup = false;
  bool lambda_stable = false;
  bool dot_normal = false;
  bool circ_normal = false;
  bool sub_brace = false;
  bool left_ideal = false;         // dot subgroup, lambda stable
  bool strong_left_ideal = false;  // left ideal, dot normal
  bool ideal = false;              // strong left ideal, circ normal
};

SubsetClass classify_subset(const SkewBrace& a, const Subset& s);
bool is_ideal(const SkewBrace& a, const Subset& s);

SkewBrace sub_brace(const SkewBrace& a, const Subset& s, std::vector<Elem>* members = nullptr);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<Elem> projection;  // element -> class index
  std::vector<Elem> reps;        // class index -> least element
};
BraceQuotient quotient_brace(const SkewBrace& a, const Subset& ideal);

// (A, o, .) is a skew brace; decided two ways and cross-checked.
bool is_symmetric(const SkewBrace& a);

bool is_brace_hom(const SkewBrace& a, const SkewBrace& b, std::span<const Elem> map);

// Sub-brace generated by seeds under both operations.
Subset generated_sub_brace(const SkewBrace& a, std::span<const Elem> seeds);

}  // namespace sbrace

#include "core/brace.hpp"

#include <string>

#include "core/error.hpp"

namespace sbrace {

namespace {

constexpr std::size_t kFullAxiomCheckMax = 128;

std::vector<Elem> lambda_table(const GroupTable& dot, const GroupTable& circ) {
  const std::size_t n = dot.order();
  std::vector<Elem> lam(n * n);
  for (Elem a = 0; a < n; ++a) {
    Elem ai = dot.inv(a);
    for (Elem b = 0; b < n; ++b) lam[a * n + b] = dot.mul(ai, circ.mul(a, b));
  }
  return lam;
}

GroupTable checked_group(std::size_t n, std::vector<Elem> t, ErrorCode code, const char* which) {
  try {
    return GroupTable::from_table(n, std::move(t));
  } catch (const Error& e) {
    fail(code, std::string(which) + " is not a group: " + e.what());
  }
}

}  // namespace

std::optional<std::array<Elem, 3>> brace_axiom_witness(const GroupTable& dot, const GroupTable& circ) {
  const std::size_t n = dot.order();
  auto lam = lambda_table(dot, circ);
  // the axiom says each lambda_a is a homomorphism of (A, .)
  auto check = [&](Elem a, Elem b, Elem c) {
    return lam[a * n + dot.mul(b, c)] == dot.mul(lam[a * n + b], lam[a * n + c]);
  };
  if (n <= kFullAxiomCheckMax) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!check(a, b, c)) return std::array<Elem, 3>{a, b, c};
    return std::nullopt;
  }
  // a map f with f(1) = 1 and f(xg) = f(x)f(g) for generators g is a homomorphism
  auto gens = small_generating_set(dot, Subset::full(n));
  for (Elem a = 0; a < n; ++a) {
    if (lam[a * n] != 0) return std::array<Elem, 3>{a, 0, 0};
    for (Elem b = 0; b < n; ++b)
      for (Elem c : gens)
        if (!check(a, b, c)) return std::array<Elem, 3>{a, b, c};
  }
  return std::nullopt;
}

SkewBrace SkewBrace::from_tables(std::size_t n, std::vector<Elem> dot, std::vector<Elem> circ) {
  if (dot.size() != n * n || circ.size() != n * n) fail(ErrorCode::InvalidArgument, "tables are not n x n");
  GroupTable d = checked_group(n, std::move(dot), ErrorCode::DotNotGroup, "(A, .)");
  GroupTable c = checked_group(n, std::move(circ), ErrorCode::CircNotGroup, "(A, o)");
  return from_groups(std::move(d), std::move(c), true);
}

SkewBrace SkewBrace::from_groups(GroupTable dot, GroupTable circ, bool validate) {
  if (dot.order() != circ.order()) fail(ErrorCode::InvalidArgument, "group orders differ");
  if (validate) {
    if (auto w = brace_axiom_witness(dot, circ)) {
      auto [a, b, c] = *w;
      fail(ErrorCode::BraceAxiomFails, "brace axiom fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                           " c=" + std::to_string(c));
    }
  }
  SkewBrace s;
  s.lam_ = lambda_table(dot, circ);
  s.dot_ = std::move(dot);
  s.circ_ = std::move(circ);
  return s;
}

SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace::from_groups(g, g, false); }

SkewBrace almost_trivial_brace(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = g.mul(b, a);
  return SkewBrace::from_groups(g, GroupTable::trusted(n, std::move(t)), false);
}

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return SkewBrace::from_groups(direct_product(a.dot(), b.dot()), direct_product(a.circ(), b.circ()), false);
}

SkewBrace brace_from_lambda(const GroupTable& dot, std::span<const Elem> lambda, bool validate) {
  const std::size_t n = dot.order();
  if (lambda.size() != n * n) fail(ErrorCode::InvalidArgument, "lambda table is not n x n");
  std::vector<Elem> circ(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) circ[a * n + b] = dot.mul(a, lambda[a * n + b]);
  if (!validate) return SkewBrace::from_groups(dot, GroupTable::trusted(n, std::move(circ)), false);
  GroupTable c = checked_group(n, std::move(circ), ErrorCode::CircNotGroup, "(A, o)");
  return SkewBrace::from_groups(dot, std::move(c), true);
}

SubsetClass classify_subset(const SkewBrace& a, const Subset& s) {
  SubsetClass r;
  if (s.universe() != a.order()) fail(ErrorCode::InvalidArgument, "subset universe differs from brace order");
  r.dot_subgroup = is_subgroup(a.dot(), s);
  r.circ_subgroup = is_subgroup(a.circ(), s);
  r.sub_brace = r.dot_subgroup && r.circ_subgroup;
  auto elems = s.elements();
  r.lambda_stable = true;
  for (Elem x = 0; x < a.order() && r.lambda_stable; ++x)
    for (Elem y : elems)
      if (!s.contains(a.lambda(x, y))) {
        r.lambda_stable = false;
        break;
      }
  r.dot_normal = r.dot_subgroup && is_normal(a.dot(), s);
  r.circ_normal = r.circ_subgroup && is_normal(a.circ(), s);
  r.left_ideal = r.dot_subgroup && r.lambda_stable;
  r.strong_left_ideal = r.left_ideal && r.dot_normal;
  r.ideal = r.strong_left_ideal && r.circ_normal;
  return r;
}

bool is_ideal(const SkewBrace& a, const Subset& s) { return classify_subset(a, s).ideal; }

SkewBrace sub_brace(const SkewBrace& a, const Subset& s, std::vector<Elem>* members) {
  if (!is_subgroup(a.dot(), s) || !is_subgroup(a.circ(), s))
    fail(ErrorCode::NotClosed, "subset is not closed under both operations");
  std::vector<Elem> m;
  GroupTable d = subgroup_table(a.dot(), s, &m);
  GroupTable c = subgroup_table(a.circ(), s);
  if (members) *members = m;
  return SkewBrace::from_groups(std::move(d), std::move(c), false);
}

BraceQuotient quotient_brace(const SkewBrace& a, const Subset& ideal) {
  if (!is_ideal(a, ideal)) fail(ErrorCode::NotIdeal, "subset is not an ideal");
  Quotient qd = quotient_group(a.dot(), ideal);
  const std::size_t m = qd.reps.size();
  std::vector<Elem> ct(m * m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) ct[x * m + y] = qd.projection[a.cmul(qd.reps[x], qd.reps[y])];
  BraceQuotient q;
  q.brace = SkewBrace::from_groups(qd.group, GroupTable::trusted(m, std::move(ct)), false);
  q.projection = std::move(qd.projection);
  q.reps = std::move(qd.reps);
  return q;
}

bool is_symmetric(const SkewBrace& a) {
  const std::size_t n = a.order();
  // (A, o, .) satisfies a.(b o c) = (a.b) o a' o (a.c), a' the o-inverse
  bool by_axiom = !brace_axiom_witness(a.circ(), a.dot()).has_value();
  // lambda_{ab} = lambda_{b o a}
  bool by_lambda = true;
  for (Elem x = 0; x < n && by_lambda; ++x)
    for (Elem y = 0; y < n && by_lambda; ++y) {
      Elem p = a.mul(x, y), q = a.cmul(y, x);
      for (Elem z = 0; z < n; ++z)
        if (a.lambda(p, z) != a.lambda(q, z)) {
          by_lambda = false;
          break;
        }
    }
  agree(by_axiom == by_lambda, "symmetry tests disagree");
  return by_axiom;
}

bool is_brace_hom(const SkewBrace& a, const SkewBrace& b, std::span<const Elem> map) {
  return is_homomorphism(a.dot(), b.dot(), map) && is_homomorphism(a.circ(), b.circ(), map);
}

Subset generated_sub_brace(const SkewBrace& a, std::span<const Elem> seeds) {
  Subset s = generated_subgroup(a.dot(), seeds);
  while (true) {
    Subset t = generated_subgroup(a.circ(), s);
    Subset u = generated_subgroup(a.dot(), t);
    if (u == s) return s;
    s = u;
  }
}

}  // namespace sbrace

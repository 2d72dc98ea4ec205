#include "core/semidirect.hpp"

#include <memory>

#include "core/error.hpp"
#include "core/isoclinism.hpp"
#include "core/series.hpp"
#include "core/words.hpp"

namespace sbrace {

Bijection lambda_op(const SkewBrace& a, Elem x) {
  const std::size_t n = a.order();
  Bijection f;
  f.codomain = n;
  f.map.resize(n);
  for (Elem b = 0; b < n; ++b) f.map[b] = a.dot().conj(x, a.lambda(x, b));
  agree(f.is_bijective() && is_homomorphism(a.dot(), a.dot(), f.map), "lambda^op is not an automorphism");
  return f;
}

Subset LambdaGroup::product_set(const Subset& x, const Subset& y) const {
  Subset out(group.order());
  x.for_each([&](Elem a) { y.for_each([&](Elem b) { out.insert(pair(a, b)); }); });
  return out;
}

LambdaGroup build_lambda_group(const SkewBrace& a) {
  const std::size_t n = a.order();
  if (n > kMaxLambdaBase)
    fail(ErrorCode::BudgetExceeded, "Lambda group is built for |A| <= " + std::to_string(kMaxLambdaBase));
  auto lop = std::make_shared<std::vector<Elem>>(n * n);  // lop[b * n + x] = lambda^op_b(x)
  for (Elem b = 0; b < n; ++b) {
    Bijection f = lambda_op(a, b);
    for (Elem x = 0; x < n; ++x) (*lop)[b * n + x] = f.map[x];
  }
  for (Elem b1 = 0; b1 < n; ++b1)
    for (Elem b2 = 0; b2 < n; ++b2) {
      Elem c = a.cmul(b1, b2);
      for (Elem x = 0; x < n; ++x)
        agree((*lop)[c * n + x] == (*lop)[b1 * n + (*lop)[b2 * n + x]], "b -> lambda^op_b is not a homomorphism");
    }
  LambdaGroup g;
  g.base = a;
  const SkewBrace base = a;
  auto mul = [base, lop, n](Elem u, Elem v) -> Elem {
    Elem a1 = u / n, b1 = u % n, a2 = v / n, b2 = v % n;
    return static_cast<Elem>(base.mul(a1, (*lop)[b1 * n + a2]) * n + base.cmul(b1, b2));
  };
  const std::size_t order = n * n;
  if (n <= kDenseLambdaBase) {
    std::vector<Elem> table(order * order);
    for (Elem u = 0; u < order; ++u)
      for (Elem v = 0; v < order; ++v) table[u * order + v] = mul(u, v);
    g.group = GroupTable::from_table(order, std::move(table));
  } else {
    g.group = GroupTable::lazy(order, mul, false);
  }
  std::vector<Elem> left(n), right(n);
  for (Elem x = 0; x < n; ++x) {
    left[x] = g.pair(x, 0);
    right[x] = g.pair(0, x);
  }
  agree(is_homomorphism(a.dot(), g.group, left) && is_homomorphism(a.circ(), g.group, right),
        "factor embeddings are not homomorphisms");
  return g;
}

GammaDecomposition verify_gamma_decomposition(const LambdaGroup& g, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "level must be >= 1");
  const SkewBrace& a = g.base;
  GammaDecomposition r;
  Subset gam = lower_central_term(g.group, n);
  Subset ln = series_term(a, SeriesKind::LSeries, n);
  Subset gc = lower_central_term(a.circ(), n);
  r.gamma_order = gam.size();
  r.product_order = ln.size() * gc.size();
  r.equal = gam == g.product_set(ln, gc);
  Subset ann = series_term(a, SeriesKind::AnnUpper, n);
  agree(g.product_set(ann, ann).is_subset_of(upper_central_term(g.group, n)),
        "pairs over Ann_n(A) are not in Z_n(Lambda)");
  return r;
}

GammaDecomposition verify_gamma_decomposition(const SkewBrace& a, std::size_t n) {
  return verify_gamma_decomposition(build_lambda_group(a), n);
}

std::vector<Elem> lambda_functor_map(const LambdaGroup& ga, const LambdaGroup& gb, std::span<const Elem> f) {
  if (f.size() != ga.base.order() || !is_brace_hom(ga.base, gb.base, f))
    fail(ErrorCode::NotBraceHom, "map is not a brace homomorphism");
  const std::size_t n = ga.base.order();
  std::vector<Elem> out(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) out[ga.pair(x, y)] = gb.pair(f[x], f[y]);
  agree(is_homomorphism(ga.group, gb.group, out), "induced map is not a group homomorphism");
  return out;
}

TheoremEReport theorem_e_check(const SkewBrace& a, const SkewBrace& b, std::size_t n, bool skip_skeleton) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "level must be >= 1");
  auto unmet = [](const std::string& which) { fail(ErrorCode::HypothesisUnmet, which); };
  if (!in_class_In(a, n).member) unmet("first brace is not in I_" + std::to_string(n));
  if (!in_class_In(b, n).member) unmet("second brace is not in I_" + std::to_string(n));
  TheoremEReport r;
  r.n = n;
  r.skeleton_checked = !skip_skeleton;
  if (!skip_skeleton) {
    if (skeleton_ideal(a, n) != series_term(a, SeriesKind::GammaLower, n + 1))
      unmet("first brace: A_(n) differs from Gamma_{n+1}");
    if (skeleton_ideal(b, n) != series_term(b, SeriesKind::GammaLower, n + 1))
      unmet("second brace: B_(n) differs from Gamma_{n+1}");
  }
  if (!find_isoclinism(a, b, n)) unmet("the braces are not " + std::to_string(n) + "-isoclinic");
  LambdaGroup ga = build_lambda_group(a), gb = build_lambda_group(b);
  r.witness = group_n_isoclinic(ga.group, gb.group, n);
  r.contradiction = !r.witness && !skip_skeleton;
  return r;
}

}  // namespace sbrace

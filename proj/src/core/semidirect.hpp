#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/brace.hpp"

namespace sbrace {

// b -> a lambda_a(b) a^-1
Bijection lambda_op(const SkewBrace& a, Elem x);

// (A, .) x (A, o) with (a1, b1)(a2, b2) = (a1 lambda^op_{b1}(a2), b1 o b2); (a, b) -> a * |A| + b.
struct LambdaGroup {
  SkewBrace base;
  GroupTable group;

  Elem pair(Elem a, Elem b) const { return static_cast<Elem>(a * base.order() + b); }
  Subset product_set(const Subset& x, const Subset& y) const;
};

inline constexpr std::size_t kMaxLambdaBase = 64;
inline constexpr std::size_t kDenseLambdaBase = 32;

LambdaGroup build_lambda_group(const SkewBrace& a);

struct GammaDecomposition {
  bool equal = false;
  std::size_t gamma_order = 0;    // |gamma_n(Lambda)|
  std::size_t product_order = 0;  // |L_n| |gamma_n(A, o)|
};

// Compares gamma_n(Lambda_A) with L_n(A) x gamma_n(A, o); asserts that the
// pairs over Ann_n(A) are inside Z_n(Lambda_A).
GammaDecomposition verify_gamma_decomposition(const SkewBrace& a, std::size_t n);
GammaDecomposition verify_gamma_decomposition(const LambdaGroup& g, std::size_t n);

// (a, b) -> (f(a), f(b)); throws NotBraceHom.
std::vector<Elem> lambda_functor_map(const LambdaGroup& ga, const LambdaGroup& gb, std::span<const Elem> f);

struct TheoremEReport {
  std::size_t n = 1;
  bool skeleton_checked = true;
  std::optional<GroupIsoclinism> witness;
  bool contradiction = false;  // hypotheses hold but no witness exists
};

// Throws HypothesisUnmet naming the failed hypothesis. With skip_skeleton the
// condition A_(n) = Gamma_{n+1}(A) is not required and a missing witness is
// not reported as a contradiction.
TheoremEReport theorem_e_check(const SkewBrace& a, const SkewBrace& b, std::size_t n, bool skip_skeleton = false);

}  // namespace sbrace

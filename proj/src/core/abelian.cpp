#include "core/abelian.hpp"

#include "core/error.hpp"
#include "core/snf.hpp"

namespace sbrace {

GroupTable cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return GroupTable::trusted(n, std::move(t));
}

std::vector<std::int64_t> mixed_radix_digits(Elem x, std::span<const std::int64_t> factors) {
  std::vector<std::int64_t> d(factors.size());
  for (std::size_t j = factors.size(); j-- > 0;) {
    d[j] = x % factors[j];
    x = static_cast<Elem>(x / factors[j]);
  }
  return d;
}

Elem mixed_radix_index(std::span<const std::int64_t> digits, std::span<const std::int64_t> factors) {
  std::int64_t x = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) x = x * factors[j] + mod_reduce(digits[j], factors[j]);
  return static_cast<Elem>(x);
}

GroupTable abelian_group(std::span<const std::int64_t> factors) {
  std::size_t n = 1;
  for (auto f : factors) {
    if (f < 1) fail(ErrorCode::InvalidArgument, "cyclic factor must be positive");
    n *= static_cast<std::size_t>(f);
  }
  if (n > 4096) fail(ErrorCode::BudgetExceeded, "coefficient group too large");
  std::vector<Elem> t(n * n);
  std::vector<std::int64_t> s(factors.size());
  for (Elem a = 0; a < n; ++a) {
    auto da = mixed_radix_digits(a, factors);
    for (Elem b = 0; b < n; ++b) {
      auto db = mixed_radix_digits(b, factors);
      for (std::size_t j = 0; j < factors.size(); ++j) s[j] = da[j] + db[j];
      t[a * n + b] = mixed_radix_index(s, factors);
    }
  }
  return GroupTable::trusted(n, std::move(t));
}

AbelianDecomposition decompose_abelian(const GroupTable& a) {
  if (!a.is_abelian()) fail(ErrorCode::NotAbelianCoefficients, "group is not abelian");
  const std::size_t n = a.order();
  // polycyclic normal form relative to a greedy generating sequence
  std::vector<Elem> gens;
  std::vector<std::int64_t> rel_order;
  constexpr std::size_t kMaxGens = 32;
  std::vector<std::vector<std::int64_t>> pc(n, std::vector<std::int64_t>(kMaxGens, 0));
  Subset span(n);
  span.insert(0);
  std::vector<Elem> members{0};
  std::vector<std::vector<std::int64_t>> relations;
  for (Elem x = 1; x < n; ++x) {
    if (span.contains(x)) continue;
    std::size_t i = gens.size();
    gens.push_back(x);
    std::int64_t m = 1;
    Elem mult = x;
    while (!span.contains(mult)) {
      mult = a.mul(mult, x);
      ++m;
    }
    std::vector<std::int64_t> rel = pc[mult];
    for (auto& c : rel) c = -c;
    rel[i] = m;
    relations.push_back(rel);
    std::size_t base = members.size();
    Elem step = x;
    for (std::int64_t c = 1; c < m; ++c, step = a.mul(step, x))
      for (std::size_t t = 0; t < base; ++t) {
        Elem y = a.mul(members[t], step);
        pc[y] = pc[members[t]];
        pc[y][i] = c;
        span.insert(y);
        members.push_back(y);
      }
  }
  const std::size_t k = gens.size();
  AbelianDecomposition out;
  if (k == 0) {
    out.coords.assign(n, {});
    return out;
  }
  IntMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r(i, j) = relations[i][j];
  SNFResult s = smith_normal_form(r);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < k; ++j)
    if (s.d(j, j) != 1) keep.push_back(j);
  for (std::size_t j : keep) out.factors.push_back(s.d(j, j));
  out.coords.assign(n, std::vector<std::int64_t>(keep.size(), 0));
  for (Elem x = 0; x < n; ++x) {
    const std::vector<std::int64_t>& c = pc[x];
    for (std::size_t t = 0; t < keep.size(); ++t) {
      std::size_t j = keep[t];
      __int128 acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += static_cast<__int128>(c[i]) * s.v(i, j);
      out.coords[x][t] = mod_reduce(static_cast<std::int64_t>(acc % out.factors[t]), out.factors[t]);
    }
  }
  out.basis.assign(keep.size(), kNone);
  for (Elem x = 0; x < n; ++x) {
    int nz = -1, cnt = 0;
    for (std::size_t t = 0; t < keep.size(); ++t)
      if (out.coords[x][t] != 0) {
        nz = static_cast<int>(t);
        ++cnt;
      }
    if (cnt == 1 && out.coords[x][nz] == 1) out.basis[nz] = x;
  }
  for (Elem b : out.basis)
    if (b == kNone) fail(ErrorCode::InternalDisagreement, "abelian decomposition lost a basis element");
  return out;
}

}  // namespace sbrace

#include "core/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "core/error.hpp"

namespace sbrace {

namespace {

constexpr std::size_t kFullAssocCheckMax = 64;

// Elements reachable from the identity by right multiplication with gens.
std::vector<Elem> right_closure(std::size_t n, const std::function<Elem(Elem, Elem)>& mul,
                                std::span<const Elem> gens) {
  Subset seen(n);
  seen.insert(0);
  std::vector<Elem> out{0};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = mul(out[i], s);
      if (!seen.contains(y)) {
        seen.insert(y);
        out.push_back(y);
      }
    }
  return out;
}

void check_shape_and_latin(std::size_t n, const std::function<Elem(Elem, Elem)>& mul) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "group of order 0");
  for (Elem a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      fail(ErrorCode::NoIdentityAtZero, "element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
  }
  std::vector<std::uint32_t> stamp(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem c = mul(a, b);
      if (c >= n) fail(ErrorCode::InvalidArgument, "table entry out of range");
      if (stamp[c] == a + 1) fail(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " repeats " + std::to_string(c));
      stamp[c] = a + 1;
    }
  }
  std::fill(stamp.begin(), stamp.end(), 0);
  for (Elem b = 0; b < n; ++b) {
    for (Elem a = 0; a < n; ++a) {
      Elem c = mul(a, b);
      if (stamp[c] == b + 1) fail(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + " repeats " + std::to_string(c));
      stamp[c] = b + 1;
    }
  }
}

// Light's test: the elements g with (xg)y = x(gy) for all x, y form a
// submagma, so checking a generating set is a complete associativity test.
void check_associative(std::size_t n, const std::function<Elem(Elem, Elem)>& mul) {
  auto report = [](Elem x, Elem y, Elem z) {
    fail(ErrorCode::NotAssociative, "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" + std::to_string(z) +
                                        " != " + std::to_string(x) + "*(" + std::to_string(y) + "*" + std::to_string(z) + ")");
  };
  if (n <= kFullAssocCheckMax) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) report(x, y, z);
    return;
  }
  std::vector<Elem> gens;
  Subset reached(n);
  reached.insert(0);
  for (Elem x = 1; x < n; ++x) {
    if (reached.contains(x)) continue;
    gens.push_back(x);
    for (Elem y : right_closure(n, mul, gens)) reached.insert(y);
    if (reached.is_full()) break;
  }
  for (Elem g : gens)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (mul(mul(x, g), y) != mul(x, mul(g, y))) report(x, g, y);
}

std::vector<Elem> full_gens(const GroupTable& g) { return small_generating_set(g, Subset::full(g.order())); }

// Smallest subgroup containing seeds and stable under conjugation by conj_by.
Subset closure(const GroupTable& g, std::span<const Elem> seeds, std::span<const Elem> conj_by) {
  const std::size_t n = g.order();
  Subset h(n);
  h.insert(0);
  std::vector<Elem> members{0};
  std::vector<Elem> gens;
  auto add_gen = [&](Elem s) {
    if (h.contains(s)) return;
    gens.push_back(s);
    std::size_t old = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto step = [&](Elem t) {
        Elem y = g.mul(members[i], t);
        if (!h.contains(y)) {
          h.insert(y);
          members.push_back(y);
        }
      };
      if (i < old)
        step(s);
      else
        for (Elem t : gens) step(t);
    }
  };
  for (Elem s : seeds) add_gen(s);
  if (conj_by.empty()) return h;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (Elem t : conj_by) {
        Elem c = g.conj(t, gens[j]);
        if (!h.contains(c)) {
          add_gen(c);
          grew = true;
        }
      }
  }
  return h;
}

}  // namespace

GroupTable GroupTable::from_table(std::size_t n, std::vector<Elem> table) {
  validate_group(n, table);
  return trusted(n, std::move(table));
}

GroupTable GroupTable::trusted(std::size_t n, std::vector<Elem> table) {
  GroupTable g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.build_inverses();
  return g;
}

GroupTable GroupTable::lazy(std::size_t n, MulFn mul, bool validate) {
  if (validate) {
    check_shape_and_latin(n, mul);
    check_associative(n, mul);
  }
  GroupTable g;
  g.n_ = n;
  g.lazy_ = std::move(mul);
  g.build_inverses();
  return g;
}

void GroupTable::build_inverses() {
  inv_.assign(n_, kNone);
  inv_[0] = 0;
  for (Elem a = 1; a < n_; ++a) {
    if (inv_[a] != kNone) continue;
    // walk powers of a until the identity
    Elem prev = a, cur = a;
    while (cur != 0) {
      prev = cur;
      cur = mul(cur, a);
    }
    inv_[a] = prev;
    inv_[prev] = a;
  }
}

Elem GroupTable::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  Elem r = 0;
  Elem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t GroupTable::elem_order(Elem a) const {
  std::size_t k = 1;
  for (Elem c = a; c != 0; c = mul(c, a)) ++k;
  return a == 0 ? 1 : k;
}

bool GroupTable::is_abelian() const {
  auto gens = full_gens(*this);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

std::vector<Elem> GroupTable::table() const {
  if (!lazy_) return table_;
  std::vector<Elem> t(n_ * n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t[a * n_ + b] = lazy_(a, b);
  return t;
}

void validate_group(std::size_t n, std::span<const Elem> table) {
  if (table.size() != n * n) fail(ErrorCode::InvalidArgument, "table is not n x n");
  for (Elem v : table)
    if (v >= n) fail(ErrorCode::InvalidArgument, "table entry out of range");
  auto mul = [&](Elem a, Elem b) { return table[a * n + b]; };
  check_shape_and_latin(n, mul);
  check_associative(n, mul);
}

bool Bijection::is_bijective() const {
  if (map.size() != codomain) return false;
  Subset seen(codomain);
  for (Elem x : map) {
    if (x >= codomain || seen.contains(x)) return false;
    seen.insert(x);
  }
  return true;
}

Bijection Bijection::inverse() const {
  Bijection b;
  b.codomain = map.size();
  b.map.assign(codomain, kNone);
  for (Elem i = 0; i < map.size(); ++i) b.map[map[i]] = i;
  return b;
}

Bijection Bijection::identity(std::size_t n) {
  Bijection b;
  b.codomain = n;
  b.map.resize(n);
  std::iota(b.map.begin(), b.map.end(), Elem{0});
  return b;
}

Subset generated_subgroup(const GroupTable& g, std::span<const Elem> seeds, bool normal_closure) {
  for (Elem s : seeds)
    if (s >= g.order()) fail(ErrorCode::InvalidArgument, "seed out of range");
  if (!normal_closure) return closure(g, seeds, {});
  auto gg = full_gens(g);
  return closure(g, seeds, gg);
}

Subset generated_subgroup(const GroupTable& g, const Subset& seeds, bool normal_closure) {
  auto e = seeds.elements();
  return generated_subgroup(g, e, normal_closure);
}

std::vector<Elem> small_generating_set(const GroupTable& g, const Subset& h) {
  std::vector<Elem> gens;
  Subset cur(g.order());
  cur.insert(0);
  std::size_t target = h.size();
  h.for_each([&](Elem x) {
    if (cur.size() == target || cur.contains(x)) return;
    gens.push_back(x);
    cur = closure(g, gens, {});
  });
  return gens;
}

bool is_subgroup(const GroupTable& g, const Subset& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  auto e = s.elements();
  for (Elem a : e)
    for (Elem b : e)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const GroupTable& g, const Subset& h) {
  if (!is_subgroup(g, h)) return false;
  auto gg = full_gens(g);
  auto hg = small_generating_set(g, h);
  for (Elem t : gg)
    for (Elem x : hg)
      if (!h.contains(g.conj(t, x))) return false;
  return true;
}

Subset center(const GroupTable& g) {
  auto gg = full_gens(g);
  Subset z(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem t : gg)
      if (g.mul(x, t) != g.mul(t, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return z;
}

Subset commutator_subgroup(const GroupTable& g, const Subset& h, const Subset& k) {
  std::vector<Elem> seeds;
  if (h.size() * k.size() <= (std::size_t{1} << 16)) {
    h.for_each([&](Elem a) { k.for_each([&](Elem b) { seeds.push_back(g.comm(a, b)); }); });
    return closure(g, seeds, {});
  }
  // [H,K] is the normal closure in <H,K> of commutators of generators.
  auto hg = small_generating_set(g, h);
  auto kg = small_generating_set(g, k);
  for (Elem a : hg)
    for (Elem b : kg) seeds.push_back(g.comm(a, b));
  std::vector<Elem> both = hg;
  both.insert(both.end(), kg.begin(), kg.end());
  return closure(g, seeds, both);
}

Subset dot_product_set(const GroupTable& g, const Subset& h, const Subset& k) {
  Subset r(g.order());
  h.for_each([&](Elem a) { k.for_each([&](Elem b) { r.insert(g.mul(a, b)); }); });
  return r;
}

std::vector<Subset> group_series(const GroupTable& g, GroupSeriesKind kind) {
  const std::size_t n = g.order();
  std::vector<Subset> out;
  auto gg = full_gens(g);
  switch (kind) {
    case GroupSeriesKind::LowerCentral: {
      out.push_back(Subset::full(n));
      while (true) {
        const Subset& prev = out.back();
        std::vector<Elem> seeds;
        for (Elem t : gg)
          for (Elem x : small_generating_set(g, prev)) seeds.push_back(g.comm(t, x));
        Subset next = closure(g, seeds, gg);
        if (next == prev) break;
        out.push_back(std::move(next));
      }
      break;
    }
    case GroupSeriesKind::UpperCentral: {
      out.push_back(Subset::singleton(n, 0));
      while (true) {
        const Subset& prev = out.back();
        Subset next(n);
        for (Elem x = 0; x < n; ++x) {
          bool in = true;
          for (Elem t : gg)
            if (!prev.contains(g.comm(x, t))) {
              in = false;
              break;
            }
          if (in) next.insert(x);
        }
        if (next == prev) break;
        out.push_back(std::move(next));
      }
      break;
    }
    case GroupSeriesKind::Derived: {
      out.push_back(Subset::full(n));
      while (true) {
        const Subset& prev = out.back();
        auto pg = small_generating_set(g, prev);
        std::vector<Elem> seeds;
        for (Elem a : pg)
          for (Elem b : pg) seeds.push_back(g.comm(a, b));
        Subset next = closure(g, seeds, pg);
        if (next == prev) break;
        out.push_back(std::move(next));
      }
      break;
    }
  }
  return out;
}

Subset lower_central_term(const GroupTable& g, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "lower central series starts at 1");
  auto s = group_series(g, GroupSeriesKind::LowerCentral);
  return s[std::min(n - 1, s.size() - 1)];
}

Subset upper_central_term(const GroupTable& g, std::size_t n) {
  auto s = group_series(g, GroupSeriesKind::UpperCentral);
  return s[std::min(n, s.size() - 1)];
}

Quotient quotient_group(const GroupTable& g, const Subset& nsub) {
  if (!is_normal(g, nsub)) fail(ErrorCode::NotNormal, "subgroup is not normal");
  const std::size_t n = g.order();
  Quotient q;
  q.projection.assign(n, kNone);
  auto members = nsub.elements();
  for (Elem x = 0; x < n; ++x) {
    if (q.projection[x] != kNone) continue;
    Elem c = static_cast<Elem>(q.reps.size());
    q.reps.push_back(x);
    for (Elem u : members) q.projection[g.mul(x, u)] = c;
  }
  const std::size_t m = q.reps.size();
  std::vector<Elem> t(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) t[a * m + b] = q.projection[g.mul(q.reps[a], q.reps[b])];
  q.group = GroupTable::trusted(m, std::move(t));
  return q;
}

GroupTable subgroup_table(const GroupTable& g, const Subset& h, std::vector<Elem>* members) {
  if (!is_subgroup(g, h)) fail(ErrorCode::NotClosed, "subset is not a subgroup");
  auto e = h.elements();
  std::vector<Elem> idx(g.order(), kNone);
  for (Elem i = 0; i < e.size(); ++i) idx[e[i]] = i;
  const std::size_t m = e.size();
  std::vector<Elem> t(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) t[a * m + b] = idx[g.mul(e[a], e[b])];
  if (members) *members = e;
  return GroupTable::trusted(m, std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  auto mul = [&a, &b, nb](Elem x, Elem y) {
    return a.mul(x / nb, y / nb) * static_cast<Elem>(nb) + b.mul(x % nb, y % nb);
  };
  if (n > 1024) {
    return GroupTable::lazy(n, [a, b, nb](Elem x, Elem y) {
      return a.mul(x / nb, y / nb) * static_cast<Elem>(nb) + b.mul(x % nb, y % nb);
    }, false);
  }
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[x * n + y] = mul(x, y);
  return GroupTable::trusted(n, std::move(t));
}

bool is_homomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> map) {
  if (map.size() != g.order()) return false;
  for (Elem x : map)
    if (x >= h.order()) return false;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

bool extend_homomorphism(const GroupTable& g, const GroupTable& h, std::span<const Elem> gens,
                         std::span<const Elem> imgs, std::vector<Elem>& map, bool injective) {
  map.assign(g.order(), kNone);
  map[0] = 0;
  Subset used(h.order());
  used.insert(0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = g.mul(x, gens[j]);
      Elem v = h.mul(map[x], imgs[j]);
      if (map[y] == kNone) {
        if (injective && used.contains(v)) return false;
        map[y] = v;
        used.insert(v);
        queue.push_back(y);
      } else if (map[y] != v) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Per-element isomorphism invariant: element order and centraliser size.
std::vector<std::uint64_t> signatures(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> sig(n);
  for (Elem x = 0; x < n; ++x) {
    std::uint64_t c = 0;
    for (Elem y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    sig[x] = (static_cast<std::uint64_t>(g.elem_order(x)) << 32) | c;
  }
  return sig;
}

}  // namespace

void for_each_isomorphism(const GroupTable& g, const GroupTable& h,
                          const std::function<bool(const Bijection&)>& visit) {
  const std::size_t n = g.order();
  if (n != h.order()) return;
  auto sg = signatures(g), sh = signatures(h);
  std::map<std::uint64_t, std::size_t> hist_g, hist_h;
  for (auto s : sg) ++hist_g[s];
  for (auto s : sh) ++hist_h[s];
  if (hist_g != hist_h) return;

  // generators with rare signatures first
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return hist_g[sg[a]] < hist_g[sg[b]]; });
  std::vector<Elem> gens;
  Subset cur = Subset::singleton(n, 0);
  for (Elem x : order) {
    if (cur.is_full()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = closure(g, gens, {});
  }
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < n; ++y)
      if (sh[y] == sg[gens[i]]) cands[i].push_back(y);

  std::vector<Elem> imgs(gens.size());
  std::vector<Elem> map;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    for (Elem c : cands[depth]) {
      imgs[depth] = c;
      std::span<const Elem> gs(gens.data(), depth + 1), is(imgs.data(), depth + 1);
      if (!extend_homomorphism(g, h, gs, is, map, true)) continue;
      if (depth + 1 == gens.size()) {
        Bijection b;
        b.codomain = n;
        b.map = map;
        if (!visit(b)) {
          stop = true;
          return;
        }
      } else {
        rec(depth + 1);
        if (stop) return;
      }
    }
  };
  if (gens.empty()) {
    visit(Bijection::identity(n));
    return;
  }
  rec(0);
}

std::optional<Bijection> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  std::optional<Bijection> out;
  for_each_isomorphism(g, h, [&](const Bijection& b) {
    out = b;
    return false;
  });
  return out;
}

std::vector<Bijection> automorphisms(const GroupTable& g) {
  std::vector<Bijection> out;
  for_each_isomorphism(g, g, [&](const Bijection& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

namespace {

// Right-nested commutator [x1,[x2,...[xn,x_{n+1}]]].
Elem nested_comm(const GroupTable& g, std::span<const Elem> xs) {
  Elem v = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) v = g.comm(xs[i], v);
  return v;
}

}  // namespace

std::optional<GroupIsoclinism> group_n_isoclinic(const GroupTable& g, const GroupTable& h, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "isoclinism degree must be >= 1");
  Subset zg = upper_central_term(g, n), zh = upper_central_term(h, n);
  Subset cg = lower_central_term(g, n + 1), ch = lower_central_term(h, n + 1);
  if (g.order() / zg.size() != h.order() / zh.size() || cg.size() != ch.size()) return std::nullopt;
  Quotient qg = quotient_group(g, zg), qh = quotient_group(h, zh);
  const std::size_t m = qg.reps.size();

  std::size_t tuples = 1;
  for (std::size_t i = 0; i <= n; ++i) tuples *= m;
  std::vector<Elem> gvals(tuples);
  std::vector<Elem> xs(n + 1);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t r = t;
    for (std::size_t i = 0; i <= n; ++i, r /= m) xs[i] = qg.reps[r % m];
    gvals[t] = nested_comm(g, xs);
  }
  auto cg_elems = cg.elements();
  std::optional<GroupIsoclinism> out;
  std::vector<Elem> beta;
  for_each_isomorphism(qg.group, qh.group, [&](const Bijection& alpha) {
    beta.assign(g.order(), kNone);
    std::vector<Elem> gens, imgs;
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t r = t;
      for (std::size_t i = 0; i <= n; ++i, r /= m) xs[i] = qh.reps[alpha.map[r % m]];
      Elem w = nested_comm(h, xs);
      Elem v = gvals[t];
      if (beta[v] == kNone) {
        beta[v] = w;
        gens.push_back(v);
        imgs.push_back(w);
      } else if (beta[v] != w) {
        return true;
      }
    }
    std::vector<Elem> ext;
    if (!extend_homomorphism(g, h, gens, imgs, ext, true)) return true;
    GroupIsoclinism iso;
    iso.n = n;
    iso.alpha = alpha;
    for (Elem v : cg_elems) {
      if (ext[v] == kNone || !ch.contains(ext[v])) return true;
      iso.beta_domain.push_back(v);
      iso.beta_image.push_back(ext[v]);
    }
    out = std::move(iso);
    return false;
  });
  return out;
}

}  // namespace sbrace

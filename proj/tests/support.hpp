#pragma once

// Brute-force oracles shared by the unit tests. Everything here works from
// the raw tables only and never calls the library's own algorithms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <vector>

#include "core/abelian.hpp"
#include "core/brace.hpp"
#include "core/enumerate.hpp"
#include "core/group.hpp"

namespace oracle {

using sbrace::Elem;
using Set = std::set<Elem>;
using Op = std::function<Elem(Elem, Elem)>;

// Cayley table of a permutation group given by its elements; identity first.
inline std::vector<Elem> perm_table(std::vector<std::vector<int>> perms) {
  std::vector<int> id(perms[0].size());
  std::iota(id.begin(), id.end(), 0);
  auto it = std::find(perms.begin(), perms.end(), id);
  std::iter_swap(perms.begin(), it);
  std::size_t n = perms.size();
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> c(id.size());
      for (std::size_t k = 0; k < id.size(); ++k) c[k] = perms[i][perms[j][k]];  // i after j
      t[i * n + j] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

inline std::vector<Elem> s3_table() {
  std::vector<std::vector<int>> p;
  std::vector<int> v{0, 1, 2};
  do p.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return perm_table(p);
}

inline std::vector<Elem> cyclic_table(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  return t;
}

// Smallest set containing 0 and the seeds closed under mul (a subgroup, as A is finite).
inline Set closure(const Op& mul, const Set& seeds) {
  Set s = seeds;
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> v(s.begin(), s.end());
    for (Elem x : v)
      for (Elem y : v)
        if (s.insert(mul(x, y)).second) grew = true;
  }
  return s;
}

inline Set to_set(const sbrace::Subset& s) {
  auto e = s.elements();
  return Set(e.begin(), e.end());
}

inline Set full(std::size_t n) {
  Set s;
  for (Elem x = 0; x < n; ++x) s.insert(x);
  return s;
}

struct Brace {
  explicit Brace(const sbrace::SkewBrace& b)
      : a(b), size(b.order()), dt(b.dot().table()), ct(b.circ().table()), di(size), ci(size) {
    for (Elem x = 0; x < size; ++x)
      for (Elem y = 0; y < size; ++y) {
        if (dt[x * size + y] == 0) di[x] = y;
        if (ct[x * size + y] == 0) ci[x] = y;
      }
  }
  const sbrace::SkewBrace& a;
  std::size_t size;
  std::vector<Elem> dt, ct, di, ci;

  std::size_t n() const { return size; }
  Elem dot(Elem x, Elem y) const { return dt[x * size + y]; }
  Elem circ(Elem x, Elem y) const { return ct[x * size + y]; }
  Elem dinv(Elem x) const { return di[x]; }
  Elem cinv(Elem x) const { return ci[x]; }
  Elem lam(Elem x, Elem y) const { return dot(dinv(x), circ(x, y)); }
  Elem star(Elem x, Elem y) const { return dot(lam(x, y), dinv(y)); }
  Elem comm(Elem x, Elem y) const { return dot(dot(x, y), dot(dinv(x), dinv(y))); }
  Elem ccomm(Elem x, Elem y) const { return circ(circ(x, y), circ(cinv(x), cinv(y))); }
  Set dclose(const Set& s) const {
    return closure([&](Elem x, Elem y) { return dot(x, y); }, s);
  }
};

// Ann_k by the element characterisation: a in Ann_k iff a*b, b*a, [a,b] lie in Ann_{k-1}.
inline std::vector<Set> ann_series(const Brace& b, std::size_t upto) {
  std::vector<Set> out{Set{0}};
  for (std::size_t k = 1; k <= upto; ++k) {
    Set cur;
    for (Elem x = 0; x < b.n(); ++x) {
      bool ok = true;
      for (Elem y = 0; y < b.n() && ok; ++y)
        ok = out.back().count(b.star(x, y)) && out.back().count(b.star(y, x)) && out.back().count(b.comm(x, y));
      if (ok) cur.insert(x);
    }
    out.push_back(cur);
  }
  return out;
}

// Gamma_1 = A, Gamma_k = <A*G, G*A, [A,G]>; with bar the G*A part is dropped.
inline std::vector<Set> gamma_series(const Brace& b, std::size_t upto, bool bar = false) {
  std::vector<Set> out{full(b.n())};
  for (std::size_t k = 2; k <= upto; ++k) {
    Set gen;
    for (Elem x = 0; x < b.n(); ++x)
      for (Elem g : out.back()) {
        gen.insert(b.star(x, g));
        gen.insert(b.comm(x, g));
        if (!bar) gen.insert(b.star(g, x));
      }
    out.push_back(b.dclose(gen));
  }
  return out;
}

// gamma_k(A, o), k = 1..upto.
inline std::vector<Set> circ_lower_central(const Brace& b, std::size_t upto) {
  std::vector<Set> out{full(b.n())};
  for (std::size_t k = 2; k <= upto; ++k) {
    Set gen;
    for (Elem x = 0; x < b.n(); ++x)
      for (Elem g : out.back()) gen.insert(b.ccomm(x, g));
    out.push_back(closure([&](Elem x, Elem y) { return b.circ(x, y); }, gen));
  }
  return out;
}

// Right-nested word value e1(a1, e2(a2, ... )) with letters s, S, g, G.
inline Elem eval(const Brace& b, const std::string& w, const std::vector<Elem>& args) {
  Elem v = args.back();
  for (std::size_t i = w.size(); i-- > 0;) {
    Elem a = args[i];
    switch (w[i]) {
      case 's': v = b.star(a, v); break;
      case 'S': v = b.star(v, a); break;
      case 'g': v = b.comm(a, v); break;
      default: v = b.comm(v, a); break;
    }
  }
  return v;
}

inline std::vector<std::string> all_words(std::size_t r) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::string> next;
    for (auto& w : out)
      for (char c : {'s', 'S', 'g', 'G'}) next.push_back(w + c);
    out = next;
  }
  return out;
}

// Calls f on every tuple in {0..n-1}^len.
inline void for_each_tuple(std::size_t n, std::size_t len, const std::function<void(const std::vector<Elem>&)>& f) {
  std::vector<Elem> t(len, 0);
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < len && ++t[i] == n) t[i++] = 0;
    if (i == len) return;
  }
}

// Permutations of {0..n-1} fixing 0.
inline void for_each_perm(std::size_t n, const std::function<void(const std::vector<Elem>&)>& f) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  do f(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
}

inline bool transports(const std::vector<Elem>& p, std::size_t n, const std::vector<Elem>& t1,
                       const std::vector<Elem>& t2) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p[t1[x * n + y]] != t2[p[x] * n + p[y]]) return false;
  return true;
}

inline std::size_t count_group_automorphisms(const std::vector<Elem>& t, std::size_t n) {
  std::size_t c = 0;
  for_each_perm(n, [&](const std::vector<Elem>& p) { c += transports(p, n, t, t); });
  return c;
}

inline std::size_t count_brace_isomorphisms(const sbrace::SkewBrace& a, const sbrace::SkewBrace& b) {
  if (a.order() != b.order()) return 0;
  std::size_t n = a.order(), c = 0;
  auto ad = a.dot().table(), ac = a.circ().table(), bd = b.dot().table(), bc = b.circ().table();
  for_each_perm(n, [&](const std::vector<Elem>& p) { c += transports(p, n, ad, bd) && transports(p, n, ac, bc); });
  return c;
}

// Least relabelled (dot, circ) table pair over all permutations fixing 0.
inline std::vector<Elem> canonical_form(std::size_t n, const std::vector<Elem>& dot, const std::vector<Elem>& circ) {
  std::vector<Elem> best, cur(2 * n * n);
  for_each_perm(n, [&](const std::vector<Elem>& p) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        cur[p[x] * n + p[y]] = p[dot[x * n + y]];
        cur[n * n + p[x] * n + p[y]] = p[circ[x * n + y]];
      }
    if (best.empty() || cur < best) best = cur;
  });
  return best;
}

inline bool is_group_table(std::size_t n, const std::vector<Elem>& t) {
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != x || t[x * n] != x) return false;
    std::vector<bool> row(n), col(n);
    for (std::size_t y = 0; y < n; ++y) {
      row[t[x * n + y]] = true;
      col[t[y * n + x]] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n)) return false;
    if (std::count(col.begin(), col.end(), true) != static_cast<long>(n)) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

// Skew braces with additive table dot found by trying every assignment of an
// automorphism to each element and keeping those whose circle table is a group
// satisfying the brace identity. Returns canonical forms.
inline std::set<std::vector<Elem>> exhaustive_braces(std::size_t n, const std::vector<Elem>& dot) {
  std::vector<std::vector<Elem>> auts;
  for_each_perm(n, [&](const std::vector<Elem>& p) {
    if (transports(p, n, dot, dot)) auts.push_back(p);
  });
  std::set<std::vector<Elem>> found;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Elem> circ(n * n), dinv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (dot[x * n + y] == 0) dinv[x] = static_cast<Elem>(y);
  while (true) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) circ[x * n + y] = dot[x * n + auts[choice[x]][y]];
    bool ok = is_group_table(n, circ);
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          ok = circ[a * n + dot[b * n + c]] == dot[dot[circ[a * n + b] * n + dinv[a]] * n + circ[a * n + c]];
    if (ok) found.insert(canonical_form(n, dot, circ));
    std::size_t i = 1;
    while (i < n && ++choice[i] == auts.size()) choice[i++] = 0;
    if (i >= n) break;
  }
  return found;
}

// Lambda maps g -> lambda_g in Aut(G) with lambda_{g lambda_g(h)} = lambda_g lambda_h, found by
// assigning an automorphism to the least unassigned element and closing under that rule.
// Each map is stored as the n x n table of lambda_g(h).
inline std::set<std::vector<Elem>> lambda_maps(std::size_t n, const std::vector<Elem>& dot) {
  std::vector<std::vector<Elem>> auts;
  for_each_perm(n, [&](const std::vector<Elem>& p) {
    if (transports(p, n, dot, dot)) auts.push_back(p);
  });
  std::map<std::vector<Elem>, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
  std::size_t m = auts.size();
  std::vector<int> comp(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Elem> c(n);
      for (std::size_t z = 0; z < n; ++z) c[z] = auts[a][auts[b][z]];
      comp[a * m + b] = index.at(c);
    }
  std::vector<Elem> e(n);
  std::iota(e.begin(), e.end(), 0);
  const int id = index.at(e);
  auto close = [&](std::vector<int>& asg) {
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (asg[x] < 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (asg[y] < 0) continue;
          Elem k = dot[x * n + auts[asg[x]][y]];
          int want = comp[asg[x] * m + asg[y]];
          if (asg[k] < 0) {
            asg[k] = want;
            grew = true;
          } else if (asg[k] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::set<std::vector<Elem>> out;
  std::function<void(const std::vector<int>&)> search = [&](const std::vector<int>& asg) {
    auto g = std::find(asg.begin(), asg.end(), -1);
    if (g == asg.end()) {
      std::vector<Elem> t;
      for (int a : asg) t.insert(t.end(), auts[a].begin(), auts[a].end());
      out.insert(t);
      return;
    }
    for (std::size_t a = 0; a < m; ++a) {
      auto next = asg;
      next[g - asg.begin()] = static_cast<int>(a);
      if (close(next)) search(next);
    }
  };
  std::vector<int> start(n, -1);
  start[0] = id;
  if (close(start)) search(start);
  return out;
}

// Orbits of lambda maps under phi . lambda = (g -> phi lambda_{phi^-1 g} phi^-1).
inline std::size_t lambda_orbits(std::size_t n, const std::vector<Elem>& dot, std::set<std::vector<Elem>> maps) {
  std::vector<std::vector<Elem>> auts;
  for_each_perm(n, [&](const std::vector<Elem>& p) {
    if (transports(p, n, dot, dot)) auts.push_back(p);
  });
  std::size_t orbits = 0;
  while (!maps.empty()) {
    auto lam = *maps.begin();
    ++orbits;
    for (auto& phi : auts) {
      std::vector<Elem> inv(n), img(n * n);
      for (std::size_t z = 0; z < n; ++z) inv[phi[z]] = static_cast<Elem>(z);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t z = 0; z < n; ++z) img[g * n + z] = phi[lam[inv[g] * n + inv[z]]];
      maps.erase(img);
    }
  }
  return orbits;
}

// Lambda_A = (A, .) x (A, o) with the pair law (a1 lop_{b1}(a2), b1 o b2), lop_b(x) = b lambda_b(x) b^-1.
struct LambdaSemidirect {
  Brace b;
  std::size_t n;
  explicit LambdaSemidirect(const sbrace::SkewBrace& a) : b(a), n(a.order()), inv_(n * n) {
    for (Elem x = 0; x < size(); ++x)
      for (Elem y = 0; y < size(); ++y)
        if (mul(x, y) == 0) inv_[x] = y;
  }
  Elem lop(Elem a, Elem x) const { return b.dot(b.dot(a, b.lam(a, x)), b.dinv(a)); }
  Elem mul(Elem x, Elem y) const {
    Elem a1 = static_cast<Elem>(x / n), b1 = static_cast<Elem>(x % n);
    Elem a2 = static_cast<Elem>(y / n), b2 = static_cast<Elem>(y % n);
    return static_cast<Elem>(b.dot(a1, lop(b1, a2)) * n + b.circ(b1, b2));
  }
  std::size_t size() const { return n * n; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem comm(Elem x, Elem y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }
  Set close(const Set& s) const { return closure([&](Elem x, Elem y) { return mul(x, y); }, s); }
  // gamma_1 .. gamma_upto
  std::vector<Set> lower_central(std::size_t upto) const {
    std::vector<Set> out{full(size())};
    for (std::size_t k = 2; k <= upto; ++k) {
      Set g{0};
      for (Elem x = 0; x < size(); ++x)
        for (Elem y : out.back()) g.insert(comm(x, y));
      out.push_back(close(g));
    }
    return out;
  }
  // Z_0 .. Z_upto
  std::vector<Set> upper_central(std::size_t upto) const {
    std::vector<Set> out{Set{0}};
    for (std::size_t k = 1; k <= upto; ++k) {
      Set z;
      for (Elem x = 0; x < size(); ++x) {
        bool in = true;
        for (Elem y = 0; y < size() && in; ++y) in = out.back().count(comm(x, y)) > 0;
        if (in) z.insert(x);
      }
      out.push_back(z);
    }
    return out;
  }
  Set pairs(const Set& x, const Set& y) const {
    Set out;
    for (Elem a : x)
      for (Elem c : y) out.insert(static_cast<Elem>(a * n + c));
    return out;
  }

 private:
  std::vector<Elem> inv_;
};

// A 1-isoclinism of groups checked from the definition: alpha is an isomorphism of the
// central quotients (cosets numbered by least element) and beta sends [g1, g2] to [h1, h2].
inline bool group_isoclinism_holds(const sbrace::GroupTable& g, const sbrace::GroupTable& h,
                                   const sbrace::GroupIsoclinism& w) {
  auto cosets = [](const sbrace::GroupTable& t) {
    std::size_t n = t.order();
    Set z;
    for (Elem x = 0; x < n; ++x) {
      bool c = true;
      for (Elem y = 0; y < n && c; ++y) c = t.mul(x, y) == t.mul(y, x);
      if (c) z.insert(x);
    }
    std::vector<Elem> cls(n, static_cast<Elem>(-1)), reps;
    for (Elem x = 0; x < n; ++x) {
      if (cls[x] != static_cast<Elem>(-1)) continue;
      for (Elem c : z) cls[t.mul(x, c)] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
    return std::pair{cls, reps};
  };
  auto [cg, rg] = cosets(g);
  auto [ch, rh] = cosets(h);
  if (w.n != 1 || w.alpha.map.size() != rg.size() || rg.size() != rh.size()) return false;
  if (Set(w.alpha.map.begin(), w.alpha.map.end()).size() != rg.size()) return false;
  std::map<Elem, Elem> beta;
  for (std::size_t i = 0; i < w.beta_domain.size(); ++i) beta[w.beta_domain[i]] = w.beta_image[i];
  if (Set(w.beta_image.begin(), w.beta_image.end()).size() != w.beta_image.size()) return false;
  for (Elem i = 0; i < rg.size(); ++i)
    for (Elem j = 0; j < rg.size(); ++j) {
      if (w.alpha(cg[g.mul(rg[i], rg[j])]) != ch[h.mul(rh[w.alpha(i)], rh[w.alpha(j)])]) return false;
      auto it = beta.find(g.comm(rg[i], rg[j]));
      if (it == beta.end() || it->second != h.comm(rh[w.alpha(i)], rh[w.alpha(j)])) return false;
    }
  return true;
}

// Enumerated braces per order, computed once per test binary.
inline const std::vector<sbrace::SkewBrace>& braces(std::size_t order) {
  static std::mutex m;
  static std::map<std::size_t, std::vector<sbrace::SkewBrace>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, sbrace::enumerate_all(order, order == 16)).first;
  return it->second;
}

inline std::vector<const sbrace::SkewBrace*> braces_upto(std::size_t max_order) {
  std::vector<const sbrace::SkewBrace*> out;
  for (std::size_t k = 1; k <= max_order; ++k)
    for (auto& b : braces(k)) out.push_back(&b);
  return out;
}

}  // namespace oracle

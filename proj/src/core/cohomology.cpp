#include "core/cohomology.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "core/abelian.hpp"
#include "core/error.hpp"
#include "core/series.hpp"
#include "core/snf.hpp"
#include "core/words.hpp"

namespace sbrace {

namespace detail {

// One primary summand Z/p^e of the coefficient group.
struct Component {
  std::size_t factor = 0;  // index into the invariant factors
  std::int64_t p = 0, q = 0;
  int e = 0;
  std::vector<int> zval;  // Z = sum Z/p^zval[i]
  IntMatrix vz, vzinv;
  std::vector<int> hval;  // H-part = sum Z/p^hval[j]
  IntMatrix vh, vhinv;
  std::vector<std::size_t> hcols;
};

struct H2Data {
  std::size_t n = 0;
  AbelianDecomposition dec;
  std::vector<Component> comps;
  std::unordered_map<Elem, Elem> by_index;  // mixed radix of coords -> element
};

}  // namespace detail

namespace {

using detail::Component;
using detail::H2Data;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int valuation(std::int64_t x, std::int64_t p, int e) {
  if (x == 0) return e;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t q) {
  return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % q);
}

void require_abelian(const GroupTable& a) {
  if (!a.is_abelian()) fail(ErrorCode::NotAbelianCoefficients, "coefficient group is not abelian");
}

std::string triple(Elem x, Elem y, Elem z) {
  return " at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

// Row space over Z/p^e kept in echelon form; every operation is invertible.
class Echelon {
 public:
  Echelon(std::size_t cols, std::int64_t p, int e) : cols_(cols), p_(p), e_(e), q_(ipow(p, e)), piv_(cols) {}

  void insert(std::vector<std::int64_t> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] == 0) continue;
      int v = valuation(row[c], p_, e_);
      if (piv_[c].empty()) {
        normalize(row, c, v);
        piv_[c] = std::move(row);
        val_.resize(cols_, 0);
        val_[c] = v;
        return;
      }
      if (v < val_[c]) {
        normalize(row, c, v);
        std::swap(piv_[c], row);
        val_[c] = v;
      }
      std::int64_t f = row[c] / ipow(p_, val_[c]);
      const auto& pr = piv_[c];
      for (std::size_t j = c; j < cols_; ++j)
        if (pr[j]) row[j] = ((row[j] - mulmod(f, pr[j], q_)) % q_ + q_) % q_;
    }
  }

  IntMatrix matrix() const {
    std::size_t r = 0;
    for (const auto& row : piv_) r += !row.empty();
    IntMatrix m(r, cols_);
    std::size_t i = 0;
    for (const auto& row : piv_)
      if (!row.empty()) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = row[j];
        ++i;
      }
    return m;
  }

 private:
  void normalize(std::vector<std::int64_t>& row, std::size_t c, int v) {
    std::int64_t unit = row[c] / ipow(p_, v);
    std::int64_t s = mod_inverse(unit, q_);
    for (std::size_t j = c; j < cols_; ++j) row[j] = mulmod(row[j], s, q_);
  }

  std::size_t cols_;
  std::int64_t p_;
  int e_;
  std::int64_t q_;
  std::vector<std::vector<std::int64_t>> piv_;
  std::vector<int> val_;
};

// Variables: alpha(x,y), mu(x,y) for x, y != 1.
struct Layout {
  std::size_t n;
  std::size_t m() const { return (n - 1) * (n - 1); }
  std::size_t size() const { return 2 * m(); }
  std::size_t var(int kind, Elem x, Elem y) const { return kind * m() + (x - 1) * (n - 1) + (y - 1); }
};

std::vector<Component> primary_components(const AbelianDecomposition& dec) {
  std::vector<Component> out;
  for (std::size_t j = 0; j < dec.factors.size(); ++j)
    for (auto [p, e] : factorize(dec.factors[j])) {
      Component c;
      c.factor = j;
      c.p = p;
      c.e = e;
      c.q = ipow(p, e);
      out.push_back(std::move(c));
    }
  return out;
}

std::int64_t component_value(const H2Data& d, const Component& c, Elem a) {
  return d.dec.coords[a][c.factor] % c.q;
}

// Embeds t in Z/q into Z/d_j by the Chinese remainder map.
std::int64_t embed_value(const H2Data& d, const Component& c, std::int64_t t) {
  std::int64_t dj = d.dec.factors[c.factor];
  std::int64_t m = dj / c.q;
  std::int64_t u = c.q == 1 ? 0 : mod_inverse(m % c.q, c.q);
  return mulmod(mulmod(t, m, dj), u, dj);
}

Elem element_of(const H2Data& d, const std::vector<std::int64_t>& coords) {
  return d.by_index.at(mixed_radix_index(coords, d.dec.factors));
}

std::vector<std::int64_t> cocycle_vector(const H2Data& d, const Component& c, const CocyclePair& p) {
  Layout lay{d.n};
  std::vector<std::int64_t> v(lay.size(), 0);
  for (Elem x = 1; x < d.n; ++x)
    for (Elem y = 1; y < d.n; ++y) {
      v[lay.var(0, x, y)] = component_value(d, c, p.alpha_at(x, y));
      v[lay.var(1, x, y)] = component_value(d, c, p.mu_at(x, y));
    }
  return v;
}

std::vector<std::int64_t> coboundary_vector(const SkewBrace& k, Elem x, std::int64_t q) {
  Layout lay{k.order()};
  std::vector<std::int64_t> v(lay.size(), 0);
  for (Elem u = 1; u < lay.n; ++u)
    for (Elem w = 1; w < lay.n; ++w) {
      std::int64_t a = (u == x) + (w == x) - (k.mul(u, w) == x);
      std::int64_t m = (u == x) + (w == x) - (k.cmul(u, w) == x);
      v[lay.var(0, u, w)] = (a % q + q) % q;
      v[lay.var(1, u, w)] = (m % q + q) % q;
    }
  return v;
}

// Z-coordinates s of a cocycle vector z.
std::vector<std::int64_t> z_coords(const Component& c, const std::vector<std::int64_t>& z) {
  const std::size_t n = z.size();
  std::vector<std::int64_t> s(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (z[j]) w = (w + mulmod(c.vzinv(i, j), z[j], c.q)) % c.q;
    std::int64_t step = ipow(c.p, c.e - c.zval[i]);
    agree(w % step == 0, "vector is not a cocycle");
    s[i] = w / step;
  }
  return s;
}

void build_relations(const SkewBrace& k, const Component& c, Echelon& ech) {
  const std::size_t n = k.order();
  Layout lay{n};
  const std::int64_t q = c.q;
  std::vector<std::int64_t> row(lay.size());
  auto add = [&](int kind, Elem u, Elem v, std::int64_t coef) {
    if (u != 0 && v != 0) row[lay.var(kind, u, v)] = ((row[lay.var(kind, u, v)] + coef) % q + q) % q;
  };
  auto flush = [&] {
    ech.insert(row);
    std::fill(row.begin(), row.end(), 0);
  };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      for (Elem z = 1; z < n; ++z) {
        add(0, y, z, 1);
        add(0, k.mul(x, y), z, -1);
        add(0, x, k.mul(y, z), 1);
        add(0, x, y, -1);
        flush();
        add(1, y, z, 1);
        add(1, k.cmul(x, y), z, -1);
        add(1, x, k.cmul(y, z), 1);
        add(1, x, y, -1);
        flush();
        Elem lz = k.lambda(x, z);
        add(0, y, z, 1);
        add(0, k.cmul(x, y), lz, -1);
        add(0, x, lz, 1);
        add(1, x, y, -1);
        add(1, x, k.mul(y, z), 1);
        add(1, x, z, -1);
        flush();
      }
}

void solve_component(const SkewBrace& k, Component& c, CohomologyPrime& prime) {
  const std::size_t n = k.order();
  Layout lay{n};
  const std::size_t nv = lay.size();
  Echelon ech(nv, c.p, c.e);
  build_relations(k, c, ech);
  ModSNF rz = smith_normal_form_mod(ech.matrix(), c.p, c.e, false, true);
  c.vz = rz.v;
  c.vzinv = rz.vinv;
  c.zval.assign(nv, c.e);
  for (std::size_t i = 0; i < rz.valuations.size(); ++i) c.zval[i] = rz.valuations[i];

  // relations of H: coboundaries and the orders of the Z-summands
  std::vector<std::vector<std::int64_t>> rows;
  for (Elem x = 1; x < n; ++x) rows.push_back(z_coords(c, coboundary_vector(k, x, c.q)));
  for (std::size_t i = 0; i < nv; ++i)
    if (c.zval[i] < c.e) {
      std::vector<std::int64_t> r(nv, 0);
      r[i] = ipow(c.p, c.zval[i]);
      rows.push_back(std::move(r));
    }
  IntMatrix hm(rows.size(), nv);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nv; ++j) hm(i, j) = rows[i][j];
  ModSNF rh = smith_normal_form_mod(hm, c.p, c.e, false, true);
  c.vh = rh.v;
  c.vhinv = rh.vinv;
  c.hval.assign(nv, c.e);
  for (std::size_t i = 0; i < rh.valuations.size(); ++i) c.hval[i] = rh.valuations[i];
  for (std::size_t j = 0; j < nv; ++j)
    if (c.hval[j] > 0) c.hcols.push_back(j);

  // |B| from the coboundary map itself
  IntMatrix dm(nv, n - 1);
  for (Elem x = 1; x < n; ++x) {
    auto v = coboundary_vector(k, x, c.q);
    for (std::size_t i = 0; i < nv; ++i) dm(i, x - 1) = v[i];
  }
  ModSNF rd = smith_normal_form_mod(dm, c.p, c.e, false, false);
  int b_exp = 0;
  for (int v : rd.valuations) b_exp += c.e - v;
  int z_exp = 0, h_exp = 0;
  for (int v : c.zval) z_exp += v;
  for (int v : c.hval) h_exp += v;
  agree(h_exp == z_exp - b_exp, "|H| differs from |Z| / |B|");
  prime.z_exp += z_exp;
  prime.b_exp += b_exp;
  prime.h_exp += h_exp;
}

CocyclePair from_component_vector(const SkewBrace& k, const GroupTable& a, const H2Data& d, const Component& c,
                                  const std::vector<std::int64_t>& z) {
  Layout lay{k.order()};
  CocyclePair out = zero_cocycle(k, a);
  std::vector<std::int64_t> coords(d.dec.factors.size(), 0);
  auto elem = [&](std::int64_t t) {
    coords[c.factor] = embed_value(d, c, t);
    return element_of(d, coords);
  };
  for (Elem x = 1; x < lay.n; ++x)
    for (Elem y = 1; y < lay.n; ++y) {
      out.alpha[x * lay.n + y] = elem(z[lay.var(0, x, y)]);
      out.mu[x * lay.n + y] = elem(z[lay.var(1, x, y)]);
    }
  return out;
}

std::shared_ptr<H2Data> coefficient_data(std::size_t n, const GroupTable& a) {
  auto d = std::make_shared<H2Data>();
  d->n = n;
  d->dec = decompose_abelian(a);
  for (Elem x = 0; x < a.order(); ++x) d->by_index[mixed_radix_index(d->dec.coords[x], d->dec.factors)] = x;
  d->comps = primary_components(d->dec);
  return d;
}

std::uint64_t lcm_u(std::uint64_t x, std::uint64_t y) { return x / std::gcd(x, y) * y; }

}  // namespace

const char* cocycle_identity_name(CocycleIdentity id) {
  switch (id) {
    case CocycleIdentity::NormalizationDot: return "normalization_dot";
    case CocycleIdentity::NormalizationCirc: return "normalization_circ";
    case CocycleIdentity::DotCocycle: return "dot_cocycle";
    case CocycleIdentity::CircCocycle: return "circ_cocycle";
    case CocycleIdentity::Compatibility: return "compatibility";
    case CocycleIdentity::CompatibilityLambda: return "compatibility_lambda";
  }
  return "?";
}

void validate_cocycle(const CocyclePair& p) {
  const GroupTable& a = p.a;
  require_abelian(a);
  const std::size_t n = p.k.order();
  if (p.alpha.size() != n * n || p.mu.size() != n * n)
    fail(ErrorCode::InvalidArgument, "cocycle tables must be |K| x |K|");
  for (std::size_t i = 0; i < n * n; ++i)
    if (p.alpha[i] >= a.order() || p.mu[i] >= a.order())
      fail(ErrorCode::InvalidArgument, "cocycle value out of range");
  const SkewBrace& k = p.k;
  auto bad = [](CocycleIdentity id, const std::string& at) {
    fail(ErrorCode::IdentityFails, std::string(cocycle_identity_name(id)) + " fails" + at);
  };
  auto al = [&](Elem x, Elem y) { return p.alpha_at(x, y); };
  auto mu = [&](Elem x, Elem y) { return p.mu_at(x, y); };
  auto m = [&](Elem x, Elem y) { return a.mul(x, y); };
  auto iv = [&](Elem x) { return a.inv(x); };
  for (Elem x = 0; x < n; ++x) {
    if (al(0, x) != 0 || al(x, 0) != 0) bad(CocycleIdentity::NormalizationDot, triple(x, x, 0));
    if (mu(0, x) != 0 || mu(x, 0) != 0) bad(CocycleIdentity::NormalizationCirc, triple(x, x, 0));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (m(m(al(y, z), iv(al(k.mul(x, y), z))), m(al(x, k.mul(y, z)), iv(al(x, y)))) != 0)
          bad(CocycleIdentity::DotCocycle, triple(x, y, z));
        if (m(m(mu(y, z), iv(mu(k.cmul(x, y), z))), m(mu(x, k.cmul(y, z)), iv(mu(x, y)))) != 0)
          bad(CocycleIdentity::CircCocycle, triple(x, y, z));
      }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem xi = k.dinv(x), xy = k.cmul(x, y), xz = k.cmul(x, z);
        Elem lhs = m(m(al(y, z), al(x, xi)), m(iv(al(xy, xi)), iv(al(k.mul(xy, xi), xz))));
        Elem rhs = m(m(mu(x, z), iv(mu(x, k.mul(y, z)))), mu(x, y));
        Elem lz = k.lambda(x, z);
        Elem lhs2 = m(m(al(y, z), iv(al(xy, lz))), al(x, lz));
        Elem rhs2 = m(m(mu(x, y), iv(mu(x, k.mul(y, z)))), mu(x, z));
        agree((lhs == rhs) == (lhs2 == rhs2), "the two compatibility forms disagree" + triple(x, y, z));
        if (lhs != rhs) bad(CocycleIdentity::Compatibility, triple(x, y, z));
        if (lhs2 != rhs2) bad(CocycleIdentity::CompatibilityLambda, triple(x, y, z));
      }
}

CocyclePair zero_cocycle(const SkewBrace& k, const GroupTable& a) {
  CocyclePair p;
  p.k = k;
  p.a = a;
  p.alpha.assign(k.order() * k.order(), 0);
  p.mu.assign(k.order() * k.order(), 0);
  return p;
}

CocyclePair coboundary(const SkewBrace& k, const GroupTable& a, std::span<const Elem> h) {
  require_abelian(a);
  const std::size_t n = k.order();
  if (h.size() != n || h[0] != 0) fail(ErrorCode::InvalidArgument, "h must be a map K -> A with h(1) = 1");
  CocyclePair p = zero_cocycle(k, a);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      p.alpha[x * n + y] = a.mul(a.mul(h[x], h[y]), a.inv(h[k.mul(x, y)]));
      p.mu[x * n + y] = a.mul(a.mul(h[x], h[y]), a.inv(h[k.cmul(x, y)]));
    }
  return p;
}

CocyclePair add_cocycles(const CocyclePair& p, const CocyclePair& q) {
  CocyclePair r = p;
  for (std::size_t i = 0; i < r.alpha.size(); ++i) {
    r.alpha[i] = p.a.mul(p.alpha[i], q.alpha[i]);
    r.mu[i] = p.a.mul(p.mu[i], q.mu[i]);
  }
  return r;
}

CocyclePair negate_cocycle(const CocyclePair& p) {
  CocyclePair r = p;
  for (std::size_t i = 0; i < r.alpha.size(); ++i) {
    r.alpha[i] = p.a.inv(p.alpha[i]);
    r.mu[i] = p.a.inv(p.mu[i]);
  }
  return r;
}

std::optional<std::vector<Elem>> coboundary_witness(const CocyclePair& p) {
  require_abelian(p.a);
  const std::size_t n = p.k.order();
  auto d = coefficient_data(n, p.a);
  Layout lay{n};
  std::vector<std::vector<std::int64_t>> hcoords(n, std::vector<std::int64_t>(d->dec.factors.size(), 0));
  for (const Component& c : d->comps) {
    if (n == 1) break;
    IntMatrix m(lay.size(), n - 1);
    for (Elem x = 1; x < n; ++x) {
      auto v = coboundary_vector(p.k, x, c.q);
      for (std::size_t i = 0; i < v.size(); ++i) m(i, x - 1) = v[i];
    }
    ModSNF r = smith_normal_form_mod(m, c.p, c.e, true, true);
    auto b = cocycle_vector(*d, c, p);
    std::vector<std::int64_t> ub(m.rows, 0), w(n - 1, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.rows; ++j)
        if (b[j]) ub[i] = (ub[i] + mulmod(r.u(i, j), b[j], c.q)) % c.q;
    for (std::size_t i = 0; i < m.rows; ++i) {
      int v = i < r.valuations.size() ? r.valuations[i] : c.e;
      if (v >= c.e) {
        if (ub[i] != 0) return std::nullopt;
        continue;
      }
      std::int64_t pv = ipow(c.p, v);
      if (ub[i] % pv != 0) return std::nullopt;
      w[i] = ub[i] / pv;
    }
    for (Elem x = 1; x < n; ++x) {
      std::int64_t hx = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) hx = (hx + mulmod(r.v(x - 1, j), w[j], c.q)) % c.q;
      hcoords[x][c.factor] = (hcoords[x][c.factor] + embed_value(*d, c, hx)) % d->dec.factors[c.factor];
    }
  }
  std::vector<Elem> h(n);
  for (Elem x = 0; x < n; ++x) h[x] = element_of(*d, hcoords[x]);
  CocyclePair back = coboundary(p.k, p.a, h);
  agree(back.alpha == p.alpha && back.mu == p.mu, "coboundary witness does not reproduce the cocycle");
  return h;
}

std::uint64_t CohomologyGroup::order() const {
  std::uint64_t r = 1;
  for (auto f : factors) r *= static_cast<std::uint64_t>(f);
  return r;
}

CohomologyGroup h2_group(const SkewBrace& k, const GroupTable& a) {
  require_abelian(a);
  const std::size_t n = k.order();
  Budget::from_env().charge(static_cast<std::uint64_t>(n) * n * n * 3 * 2 * (n > 1 ? (n - 1) * (n - 1) : 1),
                            "second cohomology");
  auto d = coefficient_data(n, a);
  CohomologyGroup h;
  h.k_order = n;
  h.coefficient_factors = d->dec.factors;
  std::map<std::int64_t, CohomologyPrime> primes;
  if (n > 1) {
    for (Component& c : d->comps) {
      CohomologyPrime& pr = primes[c.p];
      pr.p = c.p;
      solve_component(k, c, pr);
    }
  }
  for (auto& [p, pr] : primes) h.primes.push_back(pr);
  for (const Component& c : d->comps)
    for (std::size_t j : c.hcols) {
      h.factors.push_back(ipow(c.p, c.hval[j]));
      const std::size_t nv = c.zval.size();
      std::vector<std::int64_t> w(nv, 0), z(nv, 0);
      for (std::size_t i = 0; i < nv; ++i) w[i] = mulmod(c.vhinv(j, i), ipow(c.p, c.e - c.zval[i]), c.q);
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t t = 0; t < nv; ++t)
          if (w[t]) z[i] = (z[i] + mulmod(c.vz(i, t), w[t], c.q)) % c.q;
      h.generators.push_back(from_component_vector(k, a, *d, c, z));
    }
  h.data = d;
  return h;
}

std::vector<std::int64_t> cohomology_class(const CohomologyGroup& h, const CocyclePair& p) {
  const H2Data& d = *h.data;
  if (p.k.order() != d.n || p.a.order() != d.dec.coords.size())
    fail(ErrorCode::InvalidArgument, "cocycle does not match the cohomology group");
  std::vector<std::int64_t> out;
  for (const Component& c : d.comps) {
    if (c.hcols.empty()) continue;
    auto s = z_coords(c, cocycle_vector(d, c, p));
    const std::size_t nv = s.size();
    for (std::size_t j : c.hcols) {
      std::int64_t x = 0;
      for (std::size_t i = 0; i < nv; ++i)
        if (s[i]) x = (x + mulmod(s[i], c.vh(i, j), c.q)) % c.q;
      out.push_back(x % ipow(c.p, c.hval[j]));
    }
  }
  return out;
}

AnnihilatorExtension annihilator_extension(const CocyclePair& p) {
  validate_cocycle(p);
  const SkewBrace& k = p.k;
  const std::size_t na = p.a.order(), nk = k.order(), n = na * nk;
  std::vector<Elem> dot(n * n), circ(n * n);
  for (Elem k1 = 0; k1 < nk; ++k1)
    for (Elem a1 = 0; a1 < na; ++a1)
      for (Elem k2 = 0; k2 < nk; ++k2)
        for (Elem a2 = 0; a2 < na; ++a2) {
          std::size_t i = (k1 * na + a1) * n + (k2 * na + a2);
          Elem s = p.a.mul(a1, a2);
          dot[i] = static_cast<Elem>(k.mul(k1, k2) * na + p.a.mul(s, p.alpha_at(k1, k2)));
          circ[i] = static_cast<Elem>(k.cmul(k1, k2) * na + p.a.mul(s, p.mu_at(k1, k2)));
        }
  AnnihilatorExtension e;
  e.g = SkewBrace::from_tables(n, std::move(dot), std::move(circ));
  e.inclusion.resize(na);
  std::iota(e.inclusion.begin(), e.inclusion.end(), Elem{0});
  e.projection.resize(n);
  for (Elem x = 0; x < n; ++x) e.projection[x] = static_cast<Elem>(x / na);
  Subset image = Subset::of(n, e.inclusion);
  agree(image.is_subset_of(annihilator(e.g)), "i(A) is not inside Ann(G)");
  agree(is_brace_hom(e.g, k, e.projection), "projection is not a brace homomorphism");
  return e;
}

ExtensionData extension_data(const SkewBrace& g, const Subset& a, Transversal t) {
  if (!is_ideal(g, a) || !a.is_subset_of(annihilator(g)))
    fail(ErrorCode::NotInsideAnnihilator, "subset is not an ideal inside Ann(G)");
  ExtensionData d;
  d.quotient = quotient_brace(g, a);
  GroupTable at = subgroup_table(g.dot(), a, &d.members);
  std::vector<Elem> index(g.order(), kNone);
  for (Elem i = 0; i < d.members.size(); ++i) index[d.members[i]] = i;
  const std::size_t nk = d.quotient.reps.size();
  d.transversal = d.quotient.reps;
  if (t == Transversal::Greatest) {
    for (Elem x = 0; x < g.order(); ++x) {
      Elem c = d.quotient.projection[x];
      if (c != 0) d.transversal[c] = std::max(d.transversal[c], x);
    }
  }
  d.cocycle = zero_cocycle(d.quotient.brace, at);
  const SkewBrace& k = d.quotient.brace;
  const auto& tr = d.transversal;
  for (Elem k1 = 0; k1 < nk; ++k1)
    for (Elem k2 = 0; k2 < nk; ++k2) {
      Elem al = g.mul(g.mul(tr[k1], tr[k2]), g.dinv(tr[k.mul(k1, k2)]));
      Elem mu = g.cmul(g.cmul(tr[k1], tr[k2]), g.cinv(tr[k.cmul(k1, k2)]));
      agree(index[al] != kNone && index[mu] != kNone, "cocycle value outside A");
      d.cocycle.alpha[k1 * nk + k2] = index[al];
      d.cocycle.mu[k1 * nk + k2] = index[mu];
    }
  validate_cocycle(d.cocycle);
  return d;
}

CocyclePair extension_to_cocycle(const SkewBrace& g, const Subset& a, Transversal t) {
  return extension_data(g, a, t).cocycle;
}

namespace {

// Pushes the cocycle along each basis character of A into Z/m and takes classes.
std::vector<std::vector<std::int64_t>> character_images(const CocyclePair& p, const AbelianDecomposition& dec,
                                                        const CohomologyGroup& h2, std::int64_t m) {
  GroupTable zm = cyclic_group(static_cast<std::size_t>(m));
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t j = 0; j < dec.factors.size(); ++j) {
    std::int64_t scale = m / dec.factors[j];
    CocyclePair pushed = zero_cocycle(p.k, zm);
    for (std::size_t i = 0; i < p.alpha.size(); ++i) {
      pushed.alpha[i] = static_cast<Elem>(dec.coords[p.alpha[i]][j] * scale % m);
      pushed.mu[i] = static_cast<Elem>(dec.coords[p.mu[i]][j] * scale % m);
    }
    out.push_back(cohomology_class(h2, pushed));
  }
  return out;
}

// All classes sum_j c_j images[j]; calls visit(c, class).
void for_each_character(const std::vector<std::int64_t>& dual, const std::vector<std::vector<std::int64_t>>& images,
                        const std::vector<std::int64_t>& factors,
                        const std::function<void(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&)>& visit) {
  std::size_t total = 1;
  for (auto d : dual) total *= static_cast<std::size_t>(d);
  Budget::from_env().charge(total * (factors.size() + 1), "character enumeration");
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto c = mixed_radix_digits(static_cast<Elem>(idx), dual);
    std::vector<std::int64_t> cls(factors.size(), 0);
    for (std::size_t j = 0; j < dual.size(); ++j)
      for (std::size_t t = 0; t < factors.size(); ++t) cls[t] = (cls[t] + c[j] * images[j][t]) % factors[t];
    visit(c, cls);
  }
}

std::set<std::vector<std::int64_t>> image_set(const AbelianDecomposition& dec,
                                              const std::vector<std::vector<std::int64_t>>& images,
                                              const std::vector<std::int64_t>& factors) {
  std::set<std::vector<std::int64_t>> out;
  for_each_character(dec.factors, images, factors, [&](auto&, const auto& cls) { out.insert(cls); });
  return out;
}

}  // namespace

TransgressionResult transgression(const SkewBrace& g, const Subset& a, std::int64_t modulus) {
  ExtensionData ed = extension_data(g, a);
  const CocyclePair& p = ed.cocycle;
  AbelianDecomposition dec = decompose_abelian(p.a);
  const std::int64_t ex = dec.exponent();
  // h with coboundary values of order dividing exp(A) has values of order dividing exp(A) |K|
  std::int64_t m = modulus == 0 ? ex * static_cast<std::int64_t>(p.k.order()) : modulus;
  if (m <= 0 || m % ex != 0)
    fail(ErrorCode::ModulusTooSmall, "modulus must be a multiple of exp(A) = " + std::to_string(ex));
  TransgressionResult r;
  r.modulus = m;
  r.dual_factors = dec.factors;
  r.h2 = h2_group(p.k, cyclic_group(static_cast<std::size_t>(m)));
  r.images = character_images(p, dec, r.h2, m);

  Subset meet = series_term(g, SeriesKind::GammaLower, 2) & a;
  r.meet_order = meet.size();
  std::vector<std::vector<std::int64_t>> meet_coords;
  std::vector<Elem> index(g.order(), kNone);
  for (Elem i = 0; i < ed.members.size(); ++i) index[ed.members[i]] = i;
  meet.for_each([&](Elem x) { meet_coords.push_back(dec.coords[index[x]]); });

  std::set<std::vector<std::int64_t>> image;
  for_each_character(dec.factors, r.images, r.h2.factors, [&](const auto& c, const auto& cls) {
    image.insert(cls);
    if (std::all_of(cls.begin(), cls.end(), [](std::int64_t v) { return v == 0; })) r.kernel.push_back(c);
  });
  r.image_order = image.size();
  r.kernel_order = r.kernel.size();
  agree(r.image_order * r.kernel_order == p.a.order(), "image and kernel orders do not multiply to |A|");

  CohomologyGroup h2x = h2_group(p.k, cyclic_group(static_cast<std::size_t>(2 * m)));
  auto imx = character_images(p, dec, h2x, 2 * m);
  r.stable = image_set(dec, imx, h2x.factors).size() == r.image_order;
  if (modulus == 0) agree(r.stable, "image order changes when the modulus doubles");
  return r;
}

TheoremAResult theorem_a_check(const SkewBrace& g, const Subset& a, const SkewBrace& h, const Subset& b,
                               const std::optional<Bijection>& xi_in) {
  ExtensionData eg = extension_data(g, a);
  if (!is_ideal(h, b) || !b.is_subset_of(annihilator(h)))
    fail(ErrorCode::NotInsideAnnihilator, "B is not an ideal inside Ann(H)");
  BraceQuotient qb = quotient_brace(h, b);
  const SkewBrace& k = eg.quotient.brace;
  const std::size_t nk = k.order();
  Bijection xi;
  if (xi_in) {
    xi = *xi_in;
    if (xi.map.size() != nk || xi.codomain != qb.reps.size() || !xi.is_bijective() ||
        !is_brace_hom(k, qb.brace, xi.map))
      fail(ErrorCode::QuotientMismatch, "xi is not a brace isomorphism G/A -> H/B");
  } else {
    auto f = brace_isomorphism(k, qb.brace);
    if (!f) fail(ErrorCode::QuotientMismatch, "G/A and H/B are not isomorphic");
    xi = *f;
  }

  // cocycle of H over K through xi
  std::vector<Elem> bmembers;
  GroupTable bt = subgroup_table(h.dot(), b, &bmembers);
  std::vector<Elem> bindex(h.order(), kNone);
  for (Elem i = 0; i < bmembers.size(); ++i) bindex[bmembers[i]] = i;
  std::vector<Elem> th(nk);
  for (Elem x = 0; x < nk; ++x) th[x] = qb.reps[xi.map[x]];
  CocyclePair ph = zero_cocycle(k, bt);
  for (Elem k1 = 0; k1 < nk; ++k1)
    for (Elem k2 = 0; k2 < nk; ++k2) {
      ph.alpha[k1 * nk + k2] = bindex[h.mul(h.mul(th[k1], th[k2]), h.dinv(th[k.mul(k1, k2)]))];
      ph.mu[k1 * nk + k2] = bindex[h.cmul(h.cmul(th[k1], th[k2]), h.cinv(th[k.cmul(k1, k2)]))];
    }
  validate_cocycle(ph);
  const CocyclePair& pg = eg.cocycle;

  AbelianDecomposition da = decompose_abelian(pg.a), db = decompose_abelian(bt);
  std::int64_t m = static_cast<std::int64_t>(lcm_u(da.exponent(), db.exponent()) * nk);
  CohomologyGroup h2 = h2_group(k, cyclic_group(static_cast<std::size_t>(m)));
  auto ig = image_set(da, character_images(pg, da, h2, m), h2.factors);
  auto ih = image_set(db, character_images(ph, db, h2, m), h2.factors);
  TheoremAResult r;
  r.modulus = m;
  r.image_g = ig.size();
  r.image_h = ih.size();
  r.equal = ig == ih;
  if (!r.equal) return r;

  // L = (A x B) x_{(alpha, -beta), (mu, -nu)} K
  const std::size_t na = pg.a.order(), nb = bt.order();
  GroupTable abt = direct_product(pg.a, bt);
  CocyclePair pl = zero_cocycle(k, abt);
  for (std::size_t i = 0; i < nk * nk; ++i) {
    pl.alpha[i] = static_cast<Elem>(pg.alpha[i] * nb + bt.inv(ph.alpha[i]));
    pl.mu[i] = static_cast<Elem>(pg.mu[i] * nb + bt.inv(ph.mu[i]));
  }
  AnnihilatorExtension lext = annihilator_extension(pl);
  Subset gl = series_term(lext.g, SeriesKind::GammaLower, 2);
  Subset gg = series_term(g, SeriesKind::GammaLower, 2);

  std::vector<Elem> aindex(g.order(), kNone);
  for (Elem i = 0; i < eg.members.size(); ++i) aindex[eg.members[i]] = i;
  Isoclinism w;
  w.n = 1;
  w.theta_domain = gg.elements();
  for (Elem x : w.theta_domain) {
    Elem kk = eg.quotient.projection[x];
    Elem ai = aindex[g.mul(x, g.dinv(eg.transversal[kk]))];
    agree(ai != kNone, "element is not in its transversal coset");
    Elem found = kNone;
    int hits = 0;
    for (Elem bb = 0; bb < nb; ++bb)
      if (gl.contains(static_cast<Elem>(kk * na * nb + ai * nb + bb))) {
        found = bb;
        ++hits;
      }
    agree(hits == 1, "Gamma_2(L) does not determine theta uniquely");
    w.theta.push_back(h.mul(bmembers[bt.inv(found)], th[kk]));
  }
  // xi descends to the annihilator quotients
  BraceQuotient ag = quotient_brace(g, annihilator(g)), ah = quotient_brace(h, annihilator(h));
  w.xi.codomain = ah.reps.size();
  w.xi.map.assign(ag.reps.size(), kNone);
  for (Elem x = 0; x < g.order(); ++x) {
    Elem target = ah.projection[th[eg.quotient.projection[x]]];
    Elem& slot = w.xi.map[ag.projection[x]];
    if (slot == kNone)
      slot = target;
    else
      agree(slot == target, "xi does not descend to G/Ann(G)");
  }
  try {
    verify_isoclinism(g, h, w);
  } catch (const Error& e) {
    fail(ErrorCode::InternalDisagreement, std::string("constructed isoclinism fails: ") + e.what());
  }
  r.witness = std::move(w);
  return r;
}

}  // namespace sbrace

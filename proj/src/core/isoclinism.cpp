#include "core/isoclinism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "core/error.hpp"
#include "core/series.hpp"
#include "core/words.hpp"

namespace sbrace {

namespace {

std::vector<std::uint64_t> brace_signatures(const SkewBrace& a) {
  const std::size_t n = a.order();
  std::vector<std::uint64_t> fix(n, 0), stab(n, 0), cent(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (a.lambda(x, y) == y) {
        ++fix[x];
        ++stab[y];
      }
      if (a.mul(x, y) == a.mul(y, x)) ++cent[x];
    }
  std::vector<std::uint64_t> sig(n);
  for (Elem x = 0; x < n; ++x) {
    std::uint64_t h = a.dot().elem_order(x);
    for (std::uint64_t v : {std::uint64_t(a.circ().elem_order(x)), fix[x], stab[x], cent[x]})
      h = (h * 0x100000001b3ull) ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    sig[x] = h;
  }
  return sig;
}

// Extends gens -> imgs along both operations; injective partial map.
bool extend_brace_map(const SkewBrace& a, const SkewBrace& b, std::span<const Elem> gens, std::span<const Elem> imgs,
                      std::vector<Elem>& map, Subset& used) {
  map.assign(a.order(), kNone);
  used = Subset::singleton(b.order(), 0);
  map[0] = 0;
  std::vector<Elem> queue{0};
  auto put = [&](Elem y, Elem v) {
    if (map[y] == kNone) {
      if (used.contains(v)) return false;
      map[y] = v;
      used.insert(v);
      queue.push_back(y);
      return true;
    }
    return map[y] == v;
  };
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!put(a.mul(x, gens[j]), b.mul(map[x], imgs[j]))) return false;
      if (!put(a.cmul(x, gens[j]), b.cmul(map[x], imgs[j]))) return false;
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Annihilator quotient and skeleton data shared by the routines below.
struct Side {
  Subset ann;
  BraceQuotient q;
  Subset skel;
  std::vector<Elem> skel_elems;
};

Side make_side(const SkewBrace& a, std::size_t n) {
  Side s;
  s.ann = series_term(a, SeriesKind::AnnUpper, n);
  s.q = quotient_brace(a, s.ann);
  s.skel = skeleton_ideal(a, n);
  s.skel_elems = s.skel.elements();
  return s;
}

// Values m(reps(q_1), ..., reps(q_{n+1})) for all degree-n words m and all
// tuples of classes; index = word * m^{n+1} + tuple.
std::vector<Elem> word_values(const SkewBrace& a, const std::vector<Elem>& reps, std::size_t n,
                              const std::function<Elem(Elem)>& relabel) {
  const std::size_t m = reps.size();
  const std::uint64_t tuples = ipow(m, n + 1);
  Budget::from_env().charge(tuples * ipow(4, n), "isoclinism word table");
  auto words = words_of_degree(n);
  std::vector<Elem> out;
  out.reserve(words.size() * tuples);
  std::vector<Elem> args(n + 1);
  for (const Word& w : words)
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t r = t;
      for (std::size_t i = 0; i <= n; ++i, r /= m) args[i] = reps[relabel(static_cast<Elem>(r % m))];
      out.push_back(eval_word(a, w, args));
    }
  return out;
}

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::WitnessInvalid, what); }

}  // namespace

void for_each_brace_isomorphism(const SkewBrace& a, const SkewBrace& b,
                                const std::function<bool(const Bijection&)>& visit) {
  const std::size_t n = a.order();
  if (n != b.order()) return;
  auto sa = brace_signatures(a), sb = brace_signatures(b);
  std::map<std::uint64_t, std::size_t> ha, hb;
  for (auto s : sa) ++ha[s];
  for (auto s : sb) ++hb[s];
  if (ha != hb) return;

  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return ha[sa[x]] < ha[sa[y]]; });
  std::vector<Elem> gens;
  Subset cur = Subset::singleton(n, 0);
  for (Elem x : order) {
    if (cur.is_full()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated_sub_brace(a, gens);
  }
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < n; ++y)
      if (sb[y] == sa[gens[i]]) cands[i].push_back(y);

  std::vector<Elem> imgs(gens.size()), map;
  Subset used;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    for (Elem c : cands[depth]) {
      if (stop) return;
      imgs[depth] = c;
      std::span<const Elem> gs(gens.data(), depth + 1), is(imgs.data(), depth + 1);
      if (!extend_brace_map(a, b, gs, is, map, used)) continue;
      if (depth + 1 < gens.size()) {
        rec(depth + 1);
        continue;
      }
      if (std::find(map.begin(), map.end(), kNone) != map.end()) continue;
      if (!is_brace_hom(a, b, map)) continue;
      Bijection bij;
      bij.codomain = n;
      bij.map = map;
      if (!visit(bij)) stop = true;
    }
  };
  if (gens.empty()) {
    visit(Bijection::identity(n));
    return;
  }
  rec(0);
}

std::optional<Bijection> brace_isomorphism(const SkewBrace& a, const SkewBrace& b) {
  std::optional<Bijection> out;
  for_each_brace_isomorphism(a, b, [&](const Bijection& f) {
    out = f;
    return false;
  });
  return out;
}

std::vector<Bijection> brace_automorphisms(const SkewBrace& a) {
  std::vector<Bijection> out;
  for_each_brace_isomorphism(a, a, [&](const Bijection& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<Isoclinism> find_isoclinism(const SkewBrace& a, const SkewBrace& b, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "isoclinism degree must be >= 1");
  if (n >= 2) {
    if (!in_class_In(a, n).member) fail(ErrorCode::NotInClassIn, "first brace is not in I_" + std::to_string(n));
    if (!in_class_In(b, n).member) fail(ErrorCode::NotInClassIn, "second brace is not in I_" + std::to_string(n));
  }
  Side sa = make_side(a, n), sb = make_side(b, n);
  if (sa.q.reps.size() != sb.q.reps.size() || sa.skel.size() != sb.skel.size()) return std::nullopt;
  auto ident = [](Elem x) { return x; };
  const std::vector<Elem> va = word_values(a, sa.q.reps, n, ident);

  std::optional<Isoclinism> out;
  std::vector<Elem> theta(a.order());
  for_each_brace_isomorphism(sa.q.brace, sb.q.brace, [&](const Bijection& xi) {
    const std::vector<Elem> vb = word_values(b, sb.q.reps, n, [&](Elem q) { return xi.map[q]; });
    std::fill(theta.begin(), theta.end(), kNone);
    std::vector<Elem> gens, imgs;
    for (std::size_t i = 0; i < va.size(); ++i) {
      if (theta[va[i]] == kNone) {
        theta[va[i]] = vb[i];
        gens.push_back(va[i]);
        imgs.push_back(vb[i]);
      } else if (theta[va[i]] != vb[i]) {
        return true;
      }
    }
    std::vector<Elem> ext;
    if (!extend_homomorphism(a.dot(), b.dot(), gens, imgs, ext, true)) return true;
    for (Elem x : sa.skel_elems)
      if (ext[x] == kNone || !sb.skel.contains(ext[x])) return true;
    for (Elem x : sa.skel_elems)
      for (Elem y : sa.skel_elems)
        if (ext[a.cmul(x, y)] != b.cmul(ext[x], ext[y])) return true;
    Isoclinism w;
    w.n = n;
    w.xi = xi;
    w.theta_domain = sa.skel_elems;
    for (Elem x : sa.skel_elems) w.theta.push_back(ext[x]);
    out = std::move(w);
    return false;
  });
  return out;
}

void verify_isoclinism(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w) {
  const std::size_t n = w.n;
  if (n == 0) invalid("degree 0");
  Side sa = make_side(a, n), sb = make_side(b, n);
  const std::size_t m = sa.q.reps.size();
  if (sb.q.reps.size() != m || w.xi.map.size() != m || w.xi.codomain != m || !w.xi.is_bijective())
    invalid("xi is not a bijection of the annihilator quotients");
  if (!is_brace_hom(sa.q.brace, sb.q.brace, w.xi.map)) invalid("xi is not a brace homomorphism");
  if (w.theta_domain != sa.skel_elems || w.theta.size() != w.theta_domain.size())
    invalid("theta is not defined on A_(n)");
  std::vector<Elem> theta(a.order(), kNone);
  Subset img(b.order());
  for (std::size_t i = 0; i < w.theta.size(); ++i) {
    Elem y = w.theta[i];
    if (y >= b.order() || !sb.skel.contains(y) || img.contains(y)) invalid("theta is not a bijection onto B_(n)");
    img.insert(y);
    theta[w.theta_domain[i]] = y;
  }
  if (img.size() != sb.skel.size()) invalid("theta is not onto B_(n)");
  for (Elem x : sa.skel_elems)
    for (Elem y : sa.skel_elems)
      if (theta[a.mul(x, y)] != b.mul(theta[x], theta[y]) || theta[a.cmul(x, y)] != b.cmul(theta[x], theta[y]))
        invalid("theta is not a brace homomorphism");
  auto va = word_values(a, sa.q.reps, n, [](Elem x) { return x; });
  auto vb = word_values(b, sb.q.reps, n, [&](Elem q) { return w.xi.map[q]; });
  for (std::size_t i = 0; i < va.size(); ++i)
    if (theta[va[i]] != vb[i]) invalid("diagram does not commute");
}

Isoclinism isoclinic_via_ideals(const SkewBrace& a, const SkewBrace& b, const IdealData& d) {
  const std::size_t n = d.n;
  Side sa = make_side(a, n), sb = make_side(b, n);
  if (!is_ideal(a, d.l) || !d.l.is_subset_of(sa.ann)) fail(ErrorCode::BadIdeals, "L is not an ideal inside Ann_n(A)");
  if (!is_ideal(b, d.nn) || !d.nn.is_subset_of(sb.ann)) fail(ErrorCode::BadIdeals, "N is not an ideal inside Ann_n(B)");
  BraceQuotient ql = quotient_brace(a, d.l), qn = quotient_brace(b, d.nn);
  const std::size_t m = ql.reps.size();
  if (qn.reps.size() != m || d.xi.map.size() != m || !d.xi.is_bijective() ||
      !is_brace_hom(ql.brace, qn.brace, d.xi.map))
    fail(ErrorCode::DiagramFails, "xi is not a brace isomorphism A/L -> B/N");
  std::vector<Elem> theta(a.order(), kNone);
  if (d.theta_domain != sa.skel_elems || d.theta.size() != sa.skel_elems.size())
    fail(ErrorCode::DiagramFails, "theta is not defined on A_(n)");
  for (std::size_t i = 0; i < d.theta.size(); ++i) theta[d.theta_domain[i]] = d.theta[i];
  auto va = word_values(a, ql.reps, n, [](Elem x) { return x; });
  auto vb = word_values(b, qn.reps, n, [&](Elem q) { return d.xi.map[q]; });
  for (std::size_t i = 0; i < va.size(); ++i)
    if (theta[va[i]] != vb[i]) fail(ErrorCode::DiagramFails, "the diagram over A/L does not commute");

  // xi(L a) = N theta(a) on A_(n), and theta(L ∩ A_(n)) = N ∩ B_(n)
  for (Elem x : sa.skel_elems) {
    if (theta[x] == kNone || theta[x] >= b.order()) fail(ErrorCode::DiagramFails, "theta is not total on A_(n)");
    agree(d.xi.map[ql.projection[x]] == qn.projection[theta[x]], "xi and theta disagree on A_(n)");
  }
  Subset image_l(b.order());
  for (Elem x : sa.skel_elems)
    if (d.l.contains(x)) image_l.insert(theta[x]);
  agree(image_l == (d.nn & sb.skel), "theta(L ∩ A_(n)) differs from N ∩ B_(n)");

  // promote xi to the annihilator quotients
  Isoclinism w;
  w.n = n;
  w.xi.codomain = sa.q.reps.size();
  w.xi.map.assign(sa.q.reps.size(), kNone);
  for (Elem x = 0; x < a.order(); ++x) {
    Elem target = sb.q.projection[qn.reps[d.xi.map[ql.projection[x]]]];
    Elem& slot = w.xi.map[sa.q.projection[x]];
    if (slot == kNone)
      slot = target;
    else
      agree(slot == target, "xi does not descend to the annihilator quotients");
  }
  w.theta_domain = d.theta_domain;
  w.theta = d.theta;
  try {
    verify_isoclinism(a, b, w);
  } catch (const Error& e) {
    fail(ErrorCode::InternalDisagreement, std::string("promoted witness fails: ") + e.what());
  }
  return w;
}

FiberProduct fiber_product(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w) {
  verify_isoclinism(a, b, w);
  const std::size_t n = w.n, na = a.order(), nb = b.order();
  Side sa = make_side(a, n), sb = make_side(b, n);
  SkewBrace ab = direct_product(a, b);
  Subset cset(na * nb);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      if (w.xi.map[sa.q.projection[x]] == sb.q.projection[y]) cset.insert(x * static_cast<Elem>(nb) + y);
  FiberProduct fp;
  std::vector<Elem> members;
  fp.c = sub_brace(ab, cset, &members);
  const std::size_t nc = members.size();
  agree(nc == na * sb.ann.size(), "|C| differs from |A| |Ann_n(B)|");
  fp.n1 = Subset(nc);
  fp.n2 = Subset(nc);
  std::vector<Elem> pa(nc), pb(nc);
  for (Elem i = 0; i < nc; ++i) {
    Elem x = members[i] / static_cast<Elem>(nb), y = members[i] % static_cast<Elem>(nb);
    fp.pairs.emplace_back(x, y);
    pa[i] = x;
    pb[i] = y;
    if (y == 0 && sa.ann.contains(x)) fp.n1.insert(i);
    if (x == 0 && sb.ann.contains(y)) fp.n2.insert(i);
  }
  // projections are onto brace homomorphisms with kernels N2, N1
  agree(is_brace_hom(fp.c, a, pa) && is_brace_hom(fp.c, b, pb), "fiber product projections are not homomorphisms");
  Subset ka(nc), kb(nc), ia(na), ib(nb);
  for (Elem i = 0; i < nc; ++i) {
    if (pa[i] == 0) ka.insert(i);
    if (pb[i] == 0) kb.insert(i);
    ia.insert(pa[i]);
    ib.insert(pb[i]);
  }
  agree(ka == fp.n2 && kb == fp.n1 && ia.is_full() && ib.is_full(), "C/N2 and A (or C/N1 and B) differ");
  Subset gc = series_term(fp.c, SeriesKind::GammaLower, n + 1);
  agree((gc & fp.n1).is_trivial() && (gc & fp.n2).is_trivial(), "N_i meets Gamma_{n+1}(C)");
  if (n == 1) {
    std::vector<Elem> theta(na, kNone);
    for (std::size_t i = 0; i < w.theta.size(); ++i) theta[w.theta_domain[i]] = w.theta[i];
    Subset graph(nc);
    for (Elem i = 0; i < nc; ++i)
      if (theta[pa[i]] != kNone && theta[pa[i]] == pb[i]) graph.insert(i);
    agree(graph == gc, "Gamma_2(C) is not the graph of theta");
  }
  agree(find_isoclinism(fp.c, a, n).has_value() && find_isoclinism(fp.c, b, n).has_value(),
        "fiber product is not isoclinic to its factors");
  return fp;
}

Embedding embed_W(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w) {
  if (w.n != 1) fail(ErrorCode::InvalidArgument, "the embedding is built for n = 1");
  FiberProduct fp = fiber_product(a, b, w);
  const SkewBrace& c = fp.c;
  const std::size_t nc = c.order();
  Subset g2 = series_term(c, SeriesKind::GammaLower, 2);
  BraceQuotient q2 = quotient_brace(c, fp.n2), qg = quotient_brace(c, g2);
  SkewBrace y = direct_product(q2.brace, qg.brace);
  const Elem ng = static_cast<Elem>(qg.reps.size());
  auto idx = [&](Elem u, Elem v) { return u * ng + v; };
  std::vector<Elem> seeds;
  fp.n1.for_each([&](Elem i) { seeds.push_back(idx(q2.projection[i], qg.projection[i])); });
  Subset nsub = generated_subgroup(y.dot(), seeds);
  agree(is_ideal(y, nsub), "N is not an ideal of Y");
  BraceQuotient wq = quotient_brace(y, nsub);
  Embedding e;
  e.w = wq.brace;
  const std::size_t nw = e.w.order();
  e.rho_a.assign(a.order(), kNone);
  e.rho_b.assign(b.order(), kNone);
  for (Elem i = 0; i < nc; ++i) {
    auto [x, z] = fp.pairs[i];
    Elem ra = wq.projection[idx(q2.projection[i], 0)];
    Elem rb = wq.projection[idx(q2.projection[i], qg.projection[i])];
    if (e.rho_a[x] == kNone) e.rho_a[x] = ra;
    if (e.rho_b[z] == kNone) e.rho_b[z] = rb;
    agree(e.rho_a[x] == ra && e.rho_b[z] == rb, "rho maps depend on the chosen preimage");
  }
  auto injective = [](const std::vector<Elem>& f, std::size_t cod) {
    Subset s(cod);
    for (Elem v : f) s.insert(v);
    return s.size() == f.size();
  };
  agree(is_brace_hom(a, e.w, e.rho_a) && injective(e.rho_a, nw), "rho_A is not an embedding");
  agree(is_brace_hom(b, e.w, e.rho_b) && injective(e.rho_b, nw), "rho_B is not an embedding");
  Subset annw = annihilator(e.w);
  auto saturated = [&](const std::vector<Elem>& rho) {
    Subset dot(nw), circ(nw);
    for (Elem r : rho)
      annw.for_each([&](Elem z) {
        dot.insert(e.w.mul(r, z));
        circ.insert(e.w.cmul(r, z));
      });
    return dot.is_full() && circ.is_full();
  };
  agree(saturated(e.rho_a) && saturated(e.rho_b), "image and Ann(W) do not fill W");
  // K = image of 1 x C/Gamma_2(C)
  e.k = Subset(nw);
  for (Elem z = 0; z < ng; ++z) e.k.insert(wq.projection[idx(0, z)]);
  Subset ra = Subset::of(nw, e.rho_a);
  agree(is_ideal(e.w, e.k) && is_ideal(e.w, ra), "K or rho_A(A) is not an ideal of W");
  SkewBrace kb = sub_brace(e.w, e.k);
  agree(series_term(kb, SeriesKind::GammaLower, 2).is_trivial(), "Gamma_2(K) is not trivial");
  bool commute = true;
  ra.for_each([&](Elem r) {
    e.k.for_each([&](Elem z) {
      if (e.w.comm_dot(r, z) != 0 || e.w.comm_circ(r, z) != 0) commute = false;
    });
  });
  agree(commute, "rho_A(A) and K do not commute");
  agree(dot_product_set(e.w.dot(), ra, e.k).is_full(), "W is not rho_A(A) K");
  agree(find_isoclinism(a, e.w, 1).has_value() && find_isoclinism(b, e.w, 1).has_value(),
        "W is not isoclinic to A and B");
  return e;
}

}  // namespace sbrace

#include "core/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <atomic>
#include <exception>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/words.hpp"

namespace sbrace {

namespace {

constexpr std::size_t kMax = kMaxEnumerationOrder;
using Perm = std::array<std::uint8_t, kMax>;
using Encoding = std::array<std::uint16_t, kMax>;

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t a, b;
    std::memcpy(&a, p.data(), 8);
    std::memcpy(&b, p.data() + 8, 8);
    return static_cast<std::size_t>((a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full) ^ (a >> 29));
  }
};

struct EncodingHash {
  std::size_t operator()(const Encoding& e) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : e) h = (h ^ x) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// p after q
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  for (std::size_t i = 0; i < kMax; ++i) r[i] = p[q[i]];
  return r;
}

class Engine {
 public:
  explicit Engine(const GroupTable& g) : n_(g.order()) {
    if (n_ > kMax) fail(ErrorCode::InvalidArgument, "enumeration supports orders up to 16");
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) mul_[a][b] = static_cast<std::uint8_t>(g.mul(a, b));
    for (const Bijection& b : automorphisms(g)) {
      Perm p;
      for (std::size_t i = 0; i < kMax; ++i) p[i] = static_cast<std::uint8_t>(i < n_ ? b.map[i] : i);
      index_.emplace(p, static_cast<std::uint32_t>(aut_.size()));
      aut_.push_back(p);
    }
    for (std::size_t i = 0; i < kMax; ++i) id_[i] = static_cast<std::uint8_t>(i);
    aut_inv_.resize(aut_.size());
    for (std::size_t k = 0; k < aut_.size(); ++k)
      for (std::size_t i = 0; i < kMax; ++i) aut_inv_[k][aut_[k][i]] = static_cast<std::uint8_t>(i);
    cand_.resize(n_);
    for (Elem y = 1; y < n_; ++y)
      for (std::uint32_t c = 0; c < aut_.size(); ++c)
        if (semiregular(y, aut_[c])) cand_[y].push_back(c);
  }

  std::size_t aut_count() const { return aut_.size(); }
  const Perm& aut(std::uint32_t k) const { return aut_[k]; }

  // Visits every complete lambda map reached; reduce enables symmetry breaking.
  template <class Leaf>
  void run(bool reduce, Leaf&& leaf) {
    State s;
    for (auto& l : s.lam) l = id_;
    s.mask = 1;
    s.members = {0};
    if (reduce) {
      s.stab.resize(aut_.size());
      for (std::uint32_t k = 0; k < aut_.size(); ++k) s.stab[k] = k;
      mark_root_reps();
    }
    search(s, leaf);
  }

  Encoding encode(const std::array<Perm, kMax>& lam) const {
    Encoding e{};
    for (std::size_t g = 0; g < n_; ++g) e[g] = static_cast<std::uint16_t>(index_.at(lam[g]));
    return e;
  }

  // sigma . lambda: g -> sigma lambda_{sigma^-1 g} sigma^-1
  Encoding act(std::uint32_t sigma, const Encoding& e) const {
    Encoding r{};
    const Perm& s = aut_[sigma];
    const Perm& si = aut_inv_[sigma];
    for (std::size_t g = 0; g < n_; ++g) r[s[g]] = static_cast<std::uint16_t>(index_.at(compose(compose(s, aut_[e[g]]), si)));
    return r;
  }

  std::uint64_t nodes = 0;
  std::vector<bool> root_rep;  // candidates chosen for element 1 at the root

 private:
  struct State {
    std::array<Perm, kMax> lam;
    std::uint32_t mask = 0;
    std::vector<std::uint8_t> members, gens;
    std::vector<std::uint32_t> stab;  // empty when trivial
  };

  // Orbit representatives for lambda_1 under Stab(1); every leaf of the
  // reduced search has lambda_1 among them.
  void mark_root_reps() {
    root_rep.assign(aut_.size(), n_ < 2);
    if (n_ < 2) return;
    std::vector<bool> marked(aut_.size(), false);
    std::vector<std::uint32_t> sy;
    for (std::uint32_t k = 0; k < aut_.size(); ++k)
      if (aut_[k][1] == 1) sy.push_back(k);
    for (std::uint32_t c : cand_[1]) {
      if (marked[c]) continue;
      root_rep[c] = true;
      for (std::uint32_t k : sy) marked[index_.at(compose(compose(aut_[k], aut_[c]), aut_inv_[k]))] = true;
    }
  }

  bool semiregular(Elem y, const Perm& phi) const {
    std::uint32_t seen = 1u << y;
    std::uint8_t p = static_cast<std::uint8_t>(y);
    Perm psi = phi;
    for (std::size_t k = 1;; ++k) {
      if (p == 0) return psi == id_ && n_ % k == 0;
      if (k > n_) return false;
      p = mul_[p][psi[y]];
      psi = compose(psi, phi);
      if (p != 0) {
        if (seen & (1u << p)) return false;
        seen |= 1u << p;
      }
    }
  }

  bool close(State& t, std::uint8_t y, const Perm& phi) const {
    t.lam[y] = phi;
    t.mask |= 1u << y;
    const std::size_t old = t.members.size();
    t.members.push_back(y);
    t.gens.push_back(y);
    auto step = [&](std::uint8_t x, std::uint8_t g) {
      std::uint8_t z = mul_[x][t.lam[x][g]];
      Perm l = compose(t.lam[x], t.lam[g]);
      if (t.mask & (1u << z)) return t.lam[z] == l;
      t.lam[z] = l;
      t.mask |= 1u << z;
      t.members.push_back(z);
      return true;
    };
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      std::uint8_t x = t.members[i];
      if (i < old) {
        if (!step(x, y)) return false;
      } else {
        for (std::uint8_t g : t.gens)
          if (!step(x, g)) return false;
      }
    }
    return n_ % t.members.size() == 0;
  }

  template <class Leaf>
  void search(const State& s, Leaf& leaf) {
    ++nodes;
    if (std::popcount(s.mask) == static_cast<int>(n_)) {
      leaf(s.lam);
      return;
    }
    const std::uint8_t y = static_cast<std::uint8_t>(std::countr_zero(~s.mask));
    std::vector<std::uint32_t> sy;
    for (std::uint32_t k : s.stab)
      if (aut_[k][y] == y) sy.push_back(k);
    const bool reduce = sy.size() > 1;
    std::vector<bool> marked;
    if (reduce) marked.assign(aut_.size(), false);
    std::vector<std::uint32_t> child_stab;
    for (std::uint32_t c : cand_[y]) {
      child_stab.clear();
      if (reduce) {
        if (marked[c]) continue;
        const Perm& phi = aut_[c];
        for (std::uint32_t k : sy) {
          std::uint32_t img = index_.at(compose(compose(aut_[k], phi), aut_inv_[k]));
          marked[img] = true;
          if (img == c) child_stab.push_back(k);
        }
      }
      State t = s;
      if (!close(t, y, aut_[c])) continue;
      t.stab = child_stab.size() > 1 ? child_stab : std::vector<std::uint32_t>{};
      search(t, leaf);
    }
  }

  std::size_t n_;
  std::uint8_t mul_[kMax][kMax]{};
  Perm id_{};
  std::vector<Perm> aut_, aut_inv_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<std::vector<std::uint32_t>> cand_;
};

}  // namespace

std::vector<EnumeratedBrace> enumerate_over_group(const GroupTable& g, EnumerationStats* stats) {
  const std::size_t n = g.order();
  Engine eng(g);
  struct ClassRec {
    Encoding canon;
    std::uint64_t stabiliser;
  };
  std::vector<ClassRec> classes;
  std::unordered_set<Encoding, EncodingHash> seen;
  std::uint64_t leaves = 0;
  eng.run(true, [&](const std::array<Perm, kMax>& lam) {
    ++leaves;
    Encoding e = eng.encode(lam);
    if (seen.count(e)) return;
    // new class: walk the Aut(G)-orbit, keep only encodings the search can reach
    ClassRec rec{e, 0};
    for (std::uint32_t s = 0; s < eng.aut_count(); ++s) {
      Encoding img = eng.act(s, e);
      if (img == e) ++rec.stabiliser;
      if (img < rec.canon) rec.canon = img;
      if (n < 2 || eng.root_rep.empty() || eng.root_rep[img[1]]) seen.insert(img);
    }
    classes.push_back(rec);
  });
  std::sort(classes.begin(), classes.end(), [](const ClassRec& a, const ClassRec& b) { return a.canon < b.canon; });
  std::vector<EnumeratedBrace> out;
  std::vector<Elem> lam(n * n);
  for (const ClassRec& c : classes) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) lam[a * n + b] = eng.aut(c.canon[a])[b];
    out.push_back({brace_from_lambda(g, lam, true), c.stabiliser});
    if (stats) stats->raw_total += eng.aut_count() / c.stabiliser;
  }
  if (stats) {
    stats->nodes += eng.nodes;
    stats->leaves += leaves;
  }
  return out;
}

std::vector<std::vector<Elem>> all_lambda_maps(const GroupTable& g) {
  const std::size_t n = g.order();
  Engine eng(g);
  std::vector<std::vector<Elem>> out;
  eng.run(false, [&](const std::array<Perm, kMax>& lam) {
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) t[a * n + b] = lam[a][b];
    out.push_back(std::move(t));
  });
  return out;
}

namespace {

void require_order(std::size_t order, bool allow_long) {
  if (order == 0 || order > kMaxEnumerationOrder) fail(ErrorCode::InvalidArgument, "enumeration covers orders 1..16");
  if (order == 16 && !allow_long)
    fail(ErrorCode::BudgetExceeded, "the order-16 enumeration is a long run; enable it explicitly (--long)");
}

}  // namespace

std::vector<SkewBrace> enumerate_all(std::size_t order, bool allow_long) {
  require_order(order, allow_long);
  std::vector<SkewBrace> out;
  for (auto& c : groups_of_order(order))
    for (auto& e : enumerate_over_group(c.group)) out.push_back(std::move(e.brace));
  return out;
}

CensusResult census(std::size_t order, const CensusOptions& opts) {
  require_order(order, opts.allow_long);
  auto groups = groups_of_order(order);
  std::vector<std::vector<CensusRow>> per_group(groups.size());
  auto work = [&](std::size_t gi) {
    for (auto& e : enumerate_over_group(groups[gi].group)) {
      CensusRow r;
      r.additive = groups[gi].tag;
      r.multiplicative = identify_group(e.brace.circ());
      r.symmetric = is_symmetric(e.brace);
      auto i2 = in_class_In(e.brace, 2);
      r.in_I2 = i2.member;
      auto fast = fast_I2(e.brace);
      r.i2_witness = fast.witness;
      r.ann_size = annihilator(e.brace).size();
      r.gamma2_size = series_term(e.brace, SeriesKind::GammaLower, 2).size();
      r.automorphisms = e.automorphisms;
      r.nilpotency = nilpotency(e.brace);
      r.brace = std::move(e.brace);
      per_group[gi].push_back(std::move(r));
    }
  };
  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (std::size_t gi = 0; gi < groups.size(); ++gi) work(gi);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t gi; (gi = next++) < groups.size();) work(gi);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  CensusResult res;
  res.summary.order = order;
  for (auto& rows : per_group)
    for (auto& r : rows) {
      r.index = res.rows.size();
      ++res.summary.total;
      ++(r.symmetric ? res.summary.symmetric : res.summary.non_symmetric);
      ++(r.in_I2 ? res.summary.in_I2 : res.summary.not_in_I2);
      res.rows.push_back(std::move(r));
    }
  return res;
}

}  // namespace sbrace

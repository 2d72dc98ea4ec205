#include "core/series.hpp"

#include "core/error.hpp"

namespace sbrace {

namespace {

Subset dot_span(const SkewBrace& a, const std::vector<Elem>& seeds) {
  return generated_subgroup(a.dot(), seeds);
}

void append_star(const SkewBrace& a, const Subset& i, const Subset& j, std::vector<Elem>& out) {
  i.for_each([&](Elem x) { j.for_each([&](Elem y) { out.push_back(a.star(x, y)); }); });
}

void append_comm(const SkewBrace& a, const Subset& i, const Subset& j, std::vector<Elem>& out) {
  i.for_each([&](Elem x) { j.for_each([&](Elem y) { out.push_back(a.comm_dot(x, y)); }); });
}

Subset ann_step(const SkewBrace& a, const Subset& prev) {
  const std::size_t n = a.order();
  Subset next(n);
  for (Elem x = 0; x < n; ++x) {
    bool in = true;
    for (Elem b = 0; b < n && in; ++b)
      in = prev.contains(a.star(x, b)) && prev.contains(a.star(b, x)) && prev.contains(a.comm_dot(x, b));
    if (in) next.insert(x);
  }
  return next;
}

std::vector<Subset> descending(const SkewBrace& a, const std::function<Subset(const Subset&)>& step) {
  std::vector<Subset> out{Subset::full(a.order())};
  while (true) {
    Subset next = step(out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

Subset star_ideal(const SkewBrace& a, const Subset& i, const Subset& j) {
  std::vector<Elem> seeds;
  append_star(a, i, j, seeds);
  return dot_span(a, seeds);
}

Subset dot_commutator(const SkewBrace& a, const Subset& i, const Subset& j) {
  return commutator_subgroup(a.dot(), i, j);
}

Subset annihilator(const SkewBrace& a) { return ann_step(a, Subset::singleton(a.order(), 0)); }

const char* series_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::AnnUpper: return "ann";
    case SeriesKind::GammaLower: return "gamma";
    case SeriesKind::GammaBarLower: return "gammabar";
    case SeriesKind::LeftAn: return "left";
    case SeriesKind::RightAn: return "right";
    case SeriesKind::StrongAn: return "strong";
    case SeriesKind::StarSoluble: return "starsoluble";
    case SeriesKind::LSeries: return "L";
    case SeriesKind::KSeries: return "K";
  }
  return "?";
}

std::optional<SeriesKind> parse_series_kind(const std::string& name) {
  for (auto k : {SeriesKind::AnnUpper, SeriesKind::GammaLower, SeriesKind::GammaBarLower, SeriesKind::LeftAn,
                 SeriesKind::RightAn, SeriesKind::StrongAn, SeriesKind::StarSoluble, SeriesKind::LSeries,
                 SeriesKind::KSeries})
    if (name == series_name(k)) return k;
  return std::nullopt;
}

std::vector<Subset> ann_series_via_quotients(const SkewBrace& a) {
  const std::size_t n = a.order();
  std::vector<Subset> out{Subset::singleton(n, 0)};
  while (true) {
    BraceQuotient q = quotient_brace(a, out.back());
    Subset top = annihilator(q.brace);
    Subset next(n);
    for (Elem x = 0; x < n; ++x)
      if (top.contains(q.projection[x])) next.insert(x);
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subset> compute_series(const SkewBrace& a, SeriesKind kind) {
  const std::size_t n = a.order();
  const Subset all = Subset::full(n);
  switch (kind) {
    case SeriesKind::AnnUpper: {
      std::vector<Subset> out{Subset::singleton(n, 0)};
      while (true) {
        Subset next = ann_step(a, out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
      }
      agree(out == ann_series_via_quotients(a), "annihilator series: element test and quotient recursion differ");
      return out;
    }
    case SeriesKind::GammaLower:
      return descending(a, [&](const Subset& g) {
        std::vector<Elem> s;
        append_star(a, all, g, s);
        append_star(a, g, all, s);
        append_comm(a, all, g, s);
        return dot_span(a, s);
      });
    case SeriesKind::GammaBarLower:
      return descending(a, [&](const Subset& g) {
        std::vector<Elem> s;
        append_star(a, all, g, s);
        append_comm(a, all, g, s);
        return dot_span(a, s);
      });
    case SeriesKind::LeftAn:
      return descending(a, [&](const Subset& g) { return star_ideal(a, all, g); });
    case SeriesKind::RightAn:
      return descending(a, [&](const Subset& g) { return star_ideal(a, g, all); });
    case SeriesKind::StarSoluble:
      return descending(a, [&](const Subset& g) { return star_ideal(a, g, g); });
    case SeriesKind::StrongAn: {
      // constant on [m, 2m] forces constant from m on
      std::vector<Subset> t{all};
      while (true) {
        const std::size_t m = t.size() + 1;  // index of the next term
        std::vector<Elem> s;
        for (std::size_t i = 1; i < m; ++i) append_star(a, t[i - 1], t[m - i - 1], s);
        t.push_back(dot_span(a, s));
        if (t.back().is_trivial()) break;
        std::size_t first = t.size();
        while (first > 1 && t[first - 2] == t.back()) --first;
        if (t.size() >= 2 * first) {
          t.resize(first);
          break;
        }
      }
      return t;
    }
    case SeriesKind::LSeries:
    case SeriesKind::KSeries: {
      auto gam = group_series(a.circ(), GroupSeriesKind::LowerCentral);
      auto gamma_term = [&](std::size_t k) { return gam[std::min(k - 1, gam.size() - 1)]; };
      std::vector<Subset> l{all}, kk{all};
      for (std::size_t m = 2;; ++m) {
        Subset kn = star_ideal(a, gamma_term(m - 1), all);
        std::vector<Elem> s = kn.elements();
        append_star(a, all, l.back(), s);
        append_comm(a, all, l.back(), s);
        Subset ln = dot_span(a, s);
        bool gamma_stable = m >= 3 && gamma_term(m - 1) == gamma_term(m - 2);
        bool l_stable = ln == l.back();
        bool k_stable = kn == kk.back();
        if (l_stable && k_stable && gamma_stable) break;
        l.push_back(std::move(ln));
        kk.push_back(std::move(kn));
      }
      auto& out = kind == SeriesKind::LSeries ? l : kk;
      while (out.size() >= 2 && out[out.size() - 1] == out[out.size() - 2]) out.pop_back();
      return out;
    }
  }
  return {};
}

Subset series_term(const SkewBrace& a, SeriesKind kind, std::size_t n) {
  auto s = compute_series(a, kind);
  if (kind == SeriesKind::AnnUpper) return s[std::min(n, s.size() - 1)];
  if (n == 0) fail(ErrorCode::InvalidArgument, "descending series are indexed from 1");
  return s[std::min(n - 1, s.size() - 1)];
}

NilpotencyReport nilpotency(const SkewBrace& a) {
  NilpotencyReport r;
  auto ann = compute_series(a, SeriesKind::AnnUpper);
  if (ann.back().is_full()) r.central = ann.size() - 1;
  auto cls = [&](SeriesKind k) -> std::optional<std::size_t> {
    auto s = compute_series(a, k);
    if (!s.back().is_trivial()) return std::nullopt;
    return s.size() - 1;
  };
  if (a.order() == 1) {
    r.central = r.left = r.right = r.strong = r.star_soluble = 0;
    return r;
  }
  r.left = cls(SeriesKind::LeftAn);
  r.right = cls(SeriesKind::RightAn);
  r.strong = cls(SeriesKind::StrongAn);
  r.star_soluble = cls(SeriesKind::StarSoluble);
  return r;
}

}  // namespace sbrace

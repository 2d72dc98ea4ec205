#include "core/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/abelian.hpp"
#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/series.hpp"
#include "core/version.hpp"
#include "core/words.hpp"

namespace sbrace {

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

// Parses N unsigned integers from one line.
std::vector<Elem> parse_row(std::string_view line, std::size_t lineno, std::size_t n) {
  std::vector<Elem> row;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j) parse_error(lineno, i + 1, "expected a non-negative integer");
    if (v >= n) parse_error(lineno, i + 1, "entry " + std::to_string(v) + " out of range");
    row.push_back(static_cast<Elem>(v));
    i = j;
  }
  if (row.size() != n)
    parse_error(lineno, 1, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
  return row;
}

std::size_t parse_header(std::string_view line, std::string_view magic) {
  std::string prefix = std::string(magic) + " v1 order=";
  if (line.substr(0, prefix.size()) != prefix) parse_error(1, 1, "expected header \"" + prefix + "N\"");
  std::string_view num = line.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size() || n == 0)
    parse_error(1, prefix.size() + 1, "bad order");
  if (const std::size_t cap = Budget::from_env().max_order; n > cap)
    fail(ErrorCode::BudgetExceeded, "order " + std::to_string(n) + " exceeds the limit " + std::to_string(cap) +
                                        " (SKEWBRACE_MAX_ORDER)");
  return n;
}

std::vector<Elem> parse_table(const std::vector<std::string_view>& lines, std::size_t first, std::size_t n) {
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (first + r >= lines.size()) parse_error(first + r + 1, 1, "table ends early");
    auto row = parse_row(lines[first + r], first + r + 1, n);
    table.insert(table.end(), row.begin(), row.end());
  }
  return table;
}

void check_identity(const std::vector<Elem>& t, std::size_t n, const char* which) {
  bool ok = true;
  for (Elem x = 0; x < n; ++x) ok = ok && t[x] == x && t[x * n] == x;
  if (ok) return;
  std::string hint;
  for (Elem e = 0; e < n; ++e) {
    bool id = true;
    for (Elem x = 0; x < n && id; ++x) id = t[e * n + x] == x && t[x * n + e] == x;
    if (id) {
      hint = "; element " + std::to_string(e) + " is the identity, swap labels 0 and " + std::to_string(e);
      break;
    }
  }
  fail(ErrorCode::NoIdentityAtZero, std::string(which) + " table: identity is not element 0" + hint);
}

std::string table_text(const std::vector<Elem>& t, std::size_t n) {
  std::string out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(t[r * n + c]);
    }
    out += '\n';
  }
  return out;
}

Json table_json(const std::vector<Elem>& t, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < n; ++r)
    rows.push_back(std::vector<Elem>(t.begin() + r * n, t.begin() + (r + 1) * n));
  return rows;
}

std::vector<Elem> table_from_json(const Json& j, std::size_t n, std::size_t range, const char* what) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::Parse, std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<Elem> t;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) fail(ErrorCode::Parse, std::string(what) + " rows must have " + std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= range)
        fail(ErrorCode::Parse, std::string(what) + " entry out of range");
      t.push_back(v.get<Elem>());
    }
  }
  return t;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json series_json(const std::vector<Subset>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(subset_json(t));
  return out;
}

std::vector<Subset> skeleton_series(const SkewBrace& a) {
  std::vector<Subset> out;
  const std::size_t cap = Budget::from_env().max_degree;
  for (std::size_t t = 0; t <= cap; ++t) {
    out.push_back(skeleton_ideal(a, t));
    if (out.size() >= 2 && out.back() == out[out.size() - 2]) {
      out.pop_back();
      break;
    }
  }
  return out;
}

std::string group_tag(const GroupTable& g) { return g.order() <= 16 ? identify_group(g) : std::string(); }

}  // namespace

BraceDocument parse_brace(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_error(1, 1, "empty document");
  const std::size_t n = parse_header(lines[0], "skewbrace");
  auto dot = parse_table(lines, 1, n);
  if (1 + n >= lines.size() || !lines[1 + n].empty()) parse_error(n + 2, 1, "expected a blank line between the tables");
  auto circ = parse_table(lines, n + 2, n);
  BraceDocument doc;
  for (std::size_t i = 2 * n + 2; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    if (l.empty()) continue;
    if (l.substr(0, 2) != "# ") parse_error(i + 1, 1, "expected a \"# key=value\" line");
    l.remove_prefix(2);
    std::size_t eq = l.find('=');
    if (eq == std::string_view::npos || eq == 0) parse_error(i + 1, 3, "expected key=value");
    doc.meta.emplace_back(std::string(l.substr(0, eq)), std::string(l.substr(eq + 1)));
  }
  check_identity(dot, n, "dot");
  check_identity(circ, n, "circ");
  doc.brace = SkewBrace::from_tables(n, std::move(dot), std::move(circ));
  return doc;
}

std::string write_brace(const SkewBrace& a, const Metadata& meta) {
  const std::size_t n = a.order();
  std::string out = "skewbrace v1 order=" + std::to_string(n) + "\n";
  out += table_text(a.dot().table(), n);
  out += '\n';
  out += table_text(a.circ().table(), n);
  for (const auto& [k, v] : meta) out += "# " + k + "=" + v + "\n";
  return out;
}

GroupTable parse_group(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_error(1, 1, "empty document");
  const std::size_t n = parse_header(lines[0], "group");
  auto t = parse_table(lines, 1, n);
  check_identity(t, n, "group");
  return GroupTable::from_table(n, std::move(t));
}

std::string write_group(const GroupTable& g) {
  return "group v1 order=" + std::to_string(g.order()) + "\n" + table_text(g.table(), g.order());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::Io, "write failed: " + path);
}

BraceDocument load_brace(const std::string& path) { return parse_brace(read_file(path)); }

std::vector<std::int64_t> parse_coefficients(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i == text.size()) fail(ErrorCode::Parse, "empty coefficient group");
  if (text.substr(i) == "1" || text.substr(i) == "0") return out;
  while (i < text.size()) {
    if (text.substr(i, 2) != "Z/") fail(ErrorCode::Parse, "coefficients must look like \"Z/m1 x Z/m2\"");
    i += 2;
    std::int64_t m = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), m);
    if (ec != std::errc() || m < 1) fail(ErrorCode::Parse, "bad modulus in coefficient group");
    i = ptr - text.data();
    if (m > 1) out.push_back(m);
    skip();
    if (i < text.size()) {
      if (text[i] != 'x') fail(ErrorCode::Parse, "expected 'x' between factors");
      ++i;
      skip();
      if (i == text.size()) fail(ErrorCode::Parse, "missing factor after 'x'");
    }
  }
  return out;
}

Json subset_json(const Subset& s) {
  Json j;
  j["size"] = s.size();
  j["elements"] = s.elements();
  return j;
}

Json nilpotency_json(const NilpotencyReport& r) {
  Json j;
  j["central"] = optional_size(r.central);
  j["left"] = optional_size(r.left);
  j["right"] = optional_size(r.right);
  j["strong"] = optional_size(r.strong);
  j["star_soluble"] = optional_size(r.star_soluble);
  return j;
}

Json brace_info_json(const SkewBrace& a, const std::string& series, std::size_t max_n) {
  Json j;
  j["version"] = kVersion;
  j["order"] = a.order();
  j["additive"] = group_tag(a.dot());
  j["multiplicative"] = group_tag(a.circ());
  j["symmetric"] = is_symmetric(a);
  j["annihilator"] = subset_json(annihilator(a));
  Json sj = Json::object();
  bool any = false;
  for (SeriesKind k : {SeriesKind::AnnUpper, SeriesKind::GammaLower, SeriesKind::GammaBarLower, SeriesKind::LeftAn,
                       SeriesKind::RightAn, SeriesKind::StrongAn, SeriesKind::StarSoluble, SeriesKind::LSeries,
                       SeriesKind::KSeries}) {
    if (series != "all" && series != series_name(k)) continue;
    sj[series_name(k)] = series_json(compute_series(a, k));
    any = true;
  }
  if (series == "all" || series == "skeleton") {
    sj["skeleton"] = series_json(skeleton_series(a));
    any = true;
  }
  if (!any) fail(ErrorCode::InvalidArgument, "unknown series \"" + series + "\"");
  j["series"] = std::move(sj);
  j["nilpotency"] = nilpotency_json(nilpotency(a));
  Json cls = Json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    ClassInResult r = in_class_In(a, n);
    Json c;
    c["n"] = n;
    c["member"] = r.member;
    if (r.witness) {
      const auto& w = *r.witness;
      c["witness"] = {{"r", w.r}, {"s", w.s}, {"letter", format_word(Word{w.letter})}, {"u", w.u}, {"v", w.v}};
    }
    cls.push_back(std::move(c));
  }
  j["classes"] = std::move(cls);
  return j;
}

Json isoclinism_to_json(const Isoclinism& w) {
  Json j;
  j["n"] = w.n;
  j["xi"] = w.xi.map;
  j["theta_domain"] = w.theta_domain;
  j["theta"] = w.theta;
  return j;
}

Isoclinism isoclinism_from_json(const Json& j, const SkewBrace& a) {
  try {
    Isoclinism w;
    w.n = j.at("n").get<std::size_t>();
    if (w.n == 0) fail(ErrorCode::Parse, "witness degree must be >= 1");
    w.xi.map = j.at("xi").get<std::vector<Elem>>();
    w.xi.codomain = w.xi.map.size();
    w.theta = j.at("theta").get<std::vector<Elem>>();
    w.theta_domain = skeleton_ideal(a, w.n).elements();
    if (j.contains("theta_domain") && j["theta_domain"].get<std::vector<Elem>>() != w.theta_domain)
      fail(ErrorCode::WitnessInvalid, "theta_domain differs from A_(n)");
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("witness: ") + e.what());
  }
}

Json cocycle_to_json(const CocyclePair& p, const std::vector<std::int64_t>& coeff) {
  const std::size_t n = p.k.order();
  Json j;
  j["coeff"] = coeff;
  j["alpha"] = table_json(p.alpha, n);
  j["mu"] = table_json(p.mu, n);
  return j;
}

CocyclePair cocycle_from_json(const Json& j, const SkewBrace& k) {
  try {
    auto coeff = j.at("coeff").get<std::vector<std::int64_t>>();
    for (auto m : coeff)
      if (m < 1) fail(ErrorCode::Parse, "coefficient moduli must be positive");
    CocyclePair p;
    p.k = k;
    p.a = abelian_group(coeff);
    p.alpha = table_from_json(j.at("alpha"), k.order(), p.a.order(), "alpha");
    p.mu = table_from_json(j.at("mu"), k.order(), p.a.order(), "mu");
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("cocycle: ") + e.what());
  }
}

Json cohomology_json(const CohomologyGroup& h) {
  Json j;
  j["version"] = kVersion;
  j["k_order"] = h.k_order;
  j["coefficients"] = h.coefficient_factors;
  j["factors"] = h.factors;
  j["order"] = h.order();
  Json primes = Json::array();
  for (const auto& p : h.primes)
    primes.push_back({{"p", p.p}, {"z_exponent", p.z_exp}, {"b_exponent", p.b_exp}, {"h_exponent", p.h_exp}});
  j["primes"] = std::move(primes);
  // generators over the canonical coefficient group
  Json gens = Json::array();
  for (const auto& g : h.generators) {
    AbelianDecomposition dec = decompose_abelian(g.a);
    CocyclePair c = g;
    c.a = abelian_group(dec.factors);
    for (auto& v : c.alpha) v = mixed_radix_index(dec.coords[v], dec.factors);
    for (auto& v : c.mu) v = mixed_radix_index(dec.coords[v], dec.factors);
    gens.push_back(cocycle_to_json(c, dec.factors));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json transgression_json(const TransgressionResult& r) {
  Json j;
  j["version"] = kVersion;
  j["modulus"] = r.modulus;
  j["dual_factors"] = r.dual_factors;
  j["h2_factors"] = r.h2.factors;
  j["images"] = r.images;
  j["image_order"] = r.image_order;
  j["kernel_order"] = r.kernel_order;
  j["kernel"] = r.kernel;
  j["meet_order"] = r.meet_order;
  j["stable_under_doubling"] = r.stable;
  return j;
}

Json census_row_json(const CensusRow& row) {
  const std::size_t n = row.brace.order();
  Json j;
  j["index"] = row.index;
  j["order"] = n;
  j["additive"] = row.additive;
  j["multiplicative"] = row.multiplicative;
  j["symmetric"] = row.symmetric;
  j["in_I2"] = row.in_I2;
  if (row.i2_witness)
    j["i2_witness"] = {{"u", row.i2_witness->first}, {"v", row.i2_witness->second}};
  else
    j["i2_witness"] = nullptr;
  j["ann_size"] = row.ann_size;
  j["gamma2_size"] = row.gamma2_size;
  j["automorphisms"] = row.automorphisms;
  j["nilpotency"] = nilpotency_json(row.nilpotency);
  j["dot"] = table_json(row.brace.dot().table(), n);
  j["circ"] = table_json(row.brace.circ().table(), n);
  return j;
}

Json census_summary_json(const CensusSummary& s) {
  Json j;
  j["version"] = kVersion;
  j["order"] = s.order;
  j["total"] = s.total;
  j["symmetric"] = s.symmetric;
  j["non_symmetric"] = s.non_symmetric;
  j["in_I2"] = s.in_I2;
  j["not_in_I2"] = s.not_in_I2;
  return j;
}

std::string census_summary_line(const CensusSummary& s) {
  return "order=" + std::to_string(s.order) + " total=" + std::to_string(s.total) +
         " symmetric=" + std::to_string(s.symmetric) + " non_symmetric=" + std::to_string(s.non_symmetric) +
         " in_I2=" + std::to_string(s.in_I2) + " not_in_I2=" + std::to_string(s.not_in_I2);
}

}  // namespace sbrace

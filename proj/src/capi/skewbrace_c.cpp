#include "skewbrace/skewbrace.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/abelian.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/semidirect.hpp"
#include "core/series.hpp"
#include "core/version.hpp"
#include "core/words.hpp"

struct sb_brace {
  sbrace::SkewBrace b;
};

struct sb_group {
  sbrace::GroupTable g;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sb_status code_of(sbrace::ErrorCode c) {
  // enumerators are declared in the same order
  return static_cast<sb_status>(static_cast<int>(c) + 1);
}

template <class F>
sb_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SB_OK;
  } catch (const sbrace::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SB_E_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SB_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) sbrace::fail(sbrace::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

sbrace::Json parse_json(const char* text, const char* what) {
  need(text, what);
  try {
    return sbrace::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    sbrace::fail(sbrace::ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

static_assert(static_cast<int>(sbrace::ErrorCode::InternalDisagreement) + 1 == SB_E_INTERNAL);
static_assert(static_cast<int>(sbrace::ErrorCode::BudgetExceeded) + 1 == SB_E_BUDGET_EXCEEDED);

extern "C" {

const char* sb_version(void) { return sbrace::kVersion; }

const char* sb_status_name(sb_status s) {
  if (s == SB_OK) return "Ok";
  if (s < SB_OK || s > SB_E_INTERNAL) return "Unknown";
  return sbrace::error_code_name(static_cast<sbrace::ErrorCode>(static_cast<int>(s) - 1));
}

const char* sb_last_error(void) { return last_error.c_str(); }

void sb_string_free(char* s) { std::free(s); }

sb_status sb_brace_parse(const char* text, sb_brace** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new sb_brace{sbrace::parse_brace(text).brace};
  });
}

sb_status sb_brace_load(const char* path, sb_brace** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new sb_brace{sbrace::load_brace(path).brace};
  });
}

sb_status sb_brace_from_tables(size_t n, const uint32_t* dot, const uint32_t* circ, sb_brace** out) {
  return guard([&] {
    need(dot, "dot");
    need(circ, "circ");
    need(out, "out");
    if (n > sbrace::Budget::from_env().max_order)
      sbrace::fail(sbrace::ErrorCode::BudgetExceeded, "order exceeds SKEWBRACE_MAX_ORDER");
    std::vector<sbrace::Elem> d(dot, dot + n * n), c(circ, circ + n * n);
    *out = new sb_brace{sbrace::SkewBrace::from_tables(n, std::move(d), std::move(c))};
  });
}

sb_status sb_brace_to_text(const sb_brace* a, char** out) {
  return guard([&] {
    need(a, "brace");
    need(out, "out");
    *out = dup(sbrace::write_brace(a->b));
  });
}

sb_status sb_brace_save(const sb_brace* a, const char* path) {
  return guard([&] {
    need(a, "brace");
    need(path, "path");
    sbrace::write_file(path, sbrace::write_brace(a->b));
  });
}

void sb_brace_free(sb_brace* a) { delete a; }

size_t sb_brace_order(const sb_brace* a) { return a ? a->b.order() : 0; }

uint32_t sb_brace_dot(const sb_brace* a, uint32_t x, uint32_t y) { return a->b.mul(x, y); }

uint32_t sb_brace_circ(const sb_brace* a, uint32_t x, uint32_t y) { return a->b.cmul(x, y); }

sb_status sb_brace_info_json(const sb_brace* a, const char* series, unsigned max_n, char** out_json) {
  return guard([&] {
    need(a, "brace");
    need(out_json, "out");
    *out_json = dup(sbrace::brace_info_json(a->b, series ? series : "all", max_n).dump());
  });
}

sb_status sb_word_eval(const sb_brace* a, const char* word, const uint32_t* args, size_t nargs, uint32_t* out) {
  return guard([&] {
    need(a, "brace");
    need(word, "word");
    need(out, "out");
    if (nargs) need(args, "args");
    std::vector<sbrace::Elem> v(args, args + nargs);
    for (auto x : v)
      if (x >= a->b.order()) sbrace::fail(sbrace::ErrorCode::InvalidArgument, "argument out of range");
    *out = sbrace::eval_word(a->b, sbrace::parse_word(word), v);
  });
}

sb_status sb_isoclinic(const sb_brace* a, const sb_brace* b, unsigned n, int* found, char** witness_json) {
  return guard([&] {
    need(a, "first brace");
    need(b, "second brace");
    need(found, "found");
    auto w = sbrace::find_isoclinism(a->b, b->b, n);
    *found = w.has_value();
    if (w && witness_json) *witness_json = dup(sbrace::isoclinism_to_json(*w).dump());
  });
}

sb_status sb_verify_isoclinism(const sb_brace* a, const sb_brace* b, const char* witness_json) {
  return guard([&] {
    need(a, "first brace");
    need(b, "second brace");
    auto w = sbrace::isoclinism_from_json(parse_json(witness_json, "witness"), a->b);
    sbrace::verify_isoclinism(a->b, b->b, w);
  });
}

sb_status sb_fiber_product(const sb_brace* a, const sb_brace* b, const char* witness_json, sb_brace** out) {
  return guard([&] {
    need(a, "first brace");
    need(b, "second brace");
    need(out, "out");
    auto w = sbrace::isoclinism_from_json(parse_json(witness_json, "witness"), a->b);
    *out = new sb_brace{sbrace::fiber_product(a->b, b->b, w).c};
  });
}

sb_status sb_embed(const sb_brace* a, const sb_brace* b, const char* witness_json, sb_brace** out,
                   char** report_json) {
  return guard([&] {
    need(a, "first brace");
    need(b, "second brace");
    need(out, "out");
    auto w = sbrace::isoclinism_from_json(parse_json(witness_json, "witness"), a->b);
    auto e = sbrace::embed_W(a->b, b->b, w);
    if (report_json) {
      sbrace::Json j;
      j["version"] = sbrace::kVersion;
      j["order"] = e.w.order();
      j["rho_a"] = e.rho_a;
      j["rho_b"] = e.rho_b;
      j["k"] = sbrace::subset_json(e.k);
      *report_json = dup(j.dump());
    }
    *out = new sb_brace{std::move(e.w)};
  });
}

sb_status sb_h2_json(const sb_brace* k, const char* coeff, char** out_json) {
  return guard([&] {
    need(k, "brace");
    need(coeff, "coeff");
    need(out_json, "out");
    auto factors = sbrace::parse_coefficients(coeff);
    auto h = sbrace::h2_group(k->b, sbrace::abelian_group(factors));
    *out_json = dup(sbrace::cohomology_json(h).dump());
  });
}

sb_status sb_extend(const sb_brace* k, const char* cocycle_json, sb_brace** out) {
  return guard([&] {
    need(k, "brace");
    need(out, "out");
    auto p = sbrace::cocycle_from_json(parse_json(cocycle_json, "cocycle"), k->b);
    *out = new sb_brace{sbrace::annihilator_extension(p).g};
  });
}

sb_status sb_transgress_json(const sb_brace* g, const uint32_t* ideal, size_t count, int64_t modulus,
                             char** out_json) {
  return guard([&] {
    need(g, "brace");
    need(out_json, "out");
    if (count) need(ideal, "ideal");
    sbrace::Subset s(g->b.order());
    for (size_t i = 0; i < count; ++i) {
      if (ideal[i] >= g->b.order()) sbrace::fail(sbrace::ErrorCode::InvalidArgument, "ideal element out of range");
      s.insert(ideal[i]);
    }
    s.insert(0);
    *out_json = dup(sbrace::transgression_json(sbrace::transgression(g->b, s, modulus)).dump());
  });
}

sb_status sb_lambda_group(const sb_brace* a, sb_group** out) {
  return guard([&] {
    need(a, "brace");
    need(out, "out");
    *out = new sb_group{sbrace::build_lambda_group(a->b).group};
  });
}

sb_status sb_group_parse(const char* text, sb_group** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new sb_group{sbrace::parse_group(text)};
  });
}

sb_status sb_group_to_text(const sb_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    if (!g->g.is_dense()) sbrace::fail(sbrace::ErrorCode::BudgetExceeded, "only dense groups are exported");
    *out = dup(sbrace::write_group(g->g));
  });
}

size_t sb_group_order(const sb_group* g) { return g ? g->g.order() : 0; }

void sb_group_free(sb_group* g) { delete g; }

sb_status sb_census(unsigned order, int allow_long, unsigned threads, char** summary_json, char** rows_jsonl) {
  return guard([&] {
    need(summary_json, "summary");
    sbrace::CensusOptions opts;
    opts.allow_long = allow_long != 0;
    opts.threads = threads ? threads : 1;
    auto r = sbrace::census(order, opts);
    if (rows_jsonl) {
      std::string lines;
      for (const auto& row : r.rows) lines += sbrace::census_row_json(row).dump() + "\n";
      *rows_jsonl = dup(lines);
    }
    *summary_json = dup(sbrace::census_summary_json(r.summary).dump());
  });
}

}  // extern "C"

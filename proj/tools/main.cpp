// Command-line front end; talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewbrace/skewbrace.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct Failure {
  sb_status status;
  std::string message;
};

int exit_for(sb_status s) {
  switch (s) {
    case SB_OK: return kOk;
    case SB_E_BUDGET_EXCEEDED:
    case SB_E_OVERFLOW: return kBudget;
    case SB_E_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(sb_status s) {
  if (s != SB_OK) throw Failure{s, sb_last_error()};
}

// Owning wrappers for C handles and strings.
struct Brace {
  sb_brace* h = nullptr;
  Brace() = default;
  explicit Brace(const std::string& path) { check(sb_brace_load(path.c_str(), &h)); }
  Brace(const Brace&) = delete;
  Brace& operator=(const Brace&) = delete;
  ~Brace() { sb_brace_free(h); }
};

struct Text {
  char* s = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { sb_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SB_E_IO, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{SB_E_IO, "cannot write " + path};
}

std::vector<uint32_t> parse_list(const std::string& s) {
  std::vector<uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw Failure{SB_E_PARSE, "bad index \"" + item + "\" in list"};
    }
  }
  return out;
}

Json versioned(Json j) {
  if (!j.contains("version")) j["version"] = sb_version();
  return j;
}

void print_json(const Json& j) { std::cout << versioned(j).dump() << "\n"; }

std::string sizes(const Json& terms) {
  std::string out;
  for (const auto& t : terms) out += (out.empty() ? "" : " ") + std::to_string(t["size"].get<std::size_t>());
  return out;
}

std::string maybe(const Json& v) { return v.is_null() ? "none" : std::to_string(v.get<std::size_t>()); }

std::string factors_text(const Json& f) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& x : f) out += (out.empty() ? "Z/" : " x Z/") + std::to_string(x.get<long long>());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew left brace toolkit"};
  app.set_version_flag("--version", sb_version());
  app.require_subcommand(1);

  std::string file, file2, out_path, witness_path, series = "all", word, args, coeff, cocycle_path, ideal;
  std::string jsonl_path;
  bool json = false, allow_long = false;
  unsigned max_n = 2, level = 1, order = 0, threads = 1;
  long long modulus = 0;

  auto* validate = app.add_subcommand("validate", "check a brace file");
  validate->add_option("FILE", file)->required();

  auto* info = app.add_subcommand("info", "series, nilpotency and class flags");
  info->add_option("FILE", file)->required();
  info->add_option("--series", series, "all, ann, gamma, gammabar, left, right, strong, starsoluble, L, K, skeleton");
  info->add_option("--max-n", max_n, "largest n for the I_n flags");
  info->add_flag("--json", json);

  auto* wordc = app.add_subcommand("word", "brace commutator words");
  wordc->require_subcommand(1);
  auto* eval = wordc->add_subcommand("eval", "evaluate a word");
  eval->add_option("FILE", file)->required();
  eval->add_option("--word", word, "letters s, S, g, G")->required();
  eval->add_option("--args", args, "comma-separated elements")->required();
  eval->add_flag("--json", json);

  auto* iso = app.add_subcommand("isoclinic", "search for an n-isoclinism");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();
  iso->add_option("-n", level);
  iso->add_option("--witness", witness_path, "write the witness here");
  iso->add_flag("--json", json);

  auto* fiber = app.add_subcommand("fiber", "fiber product of an isoclinic pair");
  fiber->add_option("FILE1", file)->required();
  fiber->add_option("FILE2", file2)->required();
  auto* fiber_n = fiber->add_option("-n", level);
  fiber->add_option("--witness", witness_path)->required();
  fiber->add_option("-o", out_path)->required();

  auto* embed = app.add_subcommand("embed", "common brace W containing both members of a pair");
  embed->add_option("FILE1", file)->required();
  embed->add_option("FILE2", file2)->required();
  embed->add_option("--witness", witness_path)->required();
  embed->add_option("-o", out_path)->required();
  embed->add_flag("--json", json);

  auto* h2 = app.add_subcommand("h2", "second cohomology group with trivial action");
  h2->add_option("KFILE", file)->required();
  h2->add_option("--coeff", coeff, "e.g. \"Z/2 x Z/4\"")->required();
  h2->add_flag("--json", json);

  auto* extend = app.add_subcommand("extend", "annihilator extension from a cocycle");
  extend->add_option("KFILE", file)->required();
  extend->add_option("--cocycle", cocycle_path)->required();
  extend->add_option("-o", out_path)->required();

  auto* trans = app.add_subcommand("transgress", "transgression of an annihilator ideal");
  trans->add_option("GFILE", file)->required();
  trans->add_option("--ideal", ideal, "comma-separated elements")->required();
  trans->add_option("--modulus", modulus);
  trans->add_flag("--json", json);

  auto* lambda = app.add_subcommand("lambda", "export the semidirect product group");
  lambda->add_option("FILE", file)->required();
  lambda->add_option("-o", out_path)->required();

  auto* census = app.add_subcommand("census", "enumerate braces of one order");
  census->add_option("--order", order)->required()->check(CLI::Range(1, 16));
  census->add_flag("--long", allow_long, "allow the order-16 run");
  census->add_option("--jsonl", jsonl_path, "one JSON line per brace");
  census->add_option("--threads", threads);
  census->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      sb_brace* h = nullptr;
      sb_status s = sb_brace_load(file.c_str(), &h);
      if (s == SB_OK) {
        std::cout << "valid order=" << sb_brace_order(h) << "\n";
        sb_brace_free(h);
        return kOk;
      }
      if (s == SB_E_IO || s == SB_E_INTERNAL || s == SB_E_BUDGET_EXCEEDED) throw Failure{s, sb_last_error()};
      std::cout << "invalid " << sb_status_name(s) << ": " << sb_last_error() << "\n";
      return kFalse;
    }
    if (*info) {
      Brace a(file);
      Text t;
      check(sb_brace_info_json(a.h, series.c_str(), max_n, &t.s));
      Json j = Json::parse(t.str());
      if (json) {
        print_json(j);
        return kOk;
      }
      std::cout << "order " << j["order"] << "\n";
      std::cout << "additive " << j["additive"].get<std::string>() << "\n";
      std::cout << "multiplicative " << j["multiplicative"].get<std::string>() << "\n";
      std::cout << "symmetric " << (j["symmetric"].get<bool>() ? "yes" : "no") << "\n";
      for (const auto& [name, terms] : j["series"].items()) std::cout << "series " << name << ": " << sizes(terms) << "\n";
      const auto& nil = j["nilpotency"];
      std::cout << "nilpotency central=" << maybe(nil["central"]) << " left=" << maybe(nil["left"])
                << " right=" << maybe(nil["right"]) << " strong=" << maybe(nil["strong"])
                << " star_soluble=" << maybe(nil["star_soluble"]) << "\n";
      for (const auto& c : j["classes"])
        std::cout << "I_" << c["n"] << " " << (c["member"].get<bool>() ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*eval) {
      Brace a(file);
      auto v = parse_list(args);
      uint32_t r = 0;
      check(sb_word_eval(a.h, word.c_str(), v.data(), v.size(), &r));
      if (json)
        print_json({{"word", word}, {"args", v}, {"value", r}});
      else
        std::cout << r << "\n";
      return kOk;
    }
    if (*iso) {
      Brace a(file), b(file2);
      int found = 0;
      Text w;
      check(sb_isoclinic(a.h, b.h, level, &found, &w.s));
      if (found && !witness_path.empty()) spill(witness_path, w.str() + "\n");
      if (json) {
        Json j{{"n", level}, {"isoclinic", found != 0}};
        if (found) j["witness"] = Json::parse(w.str());
        print_json(j);
      } else {
        std::cout << (found ? "isoclinic" : "not isoclinic") << " n=" << level << "\n";
      }
      return found ? kOk : kFalse;
    }
    if (*fiber) {
      Brace a(file), b(file2), c;
      std::string wtext = slurp(witness_path);
      if (fiber_n->count()) {
        Json wj = Json::parse(wtext, nullptr, false);
        if (!wj.is_discarded() && wj.contains("n") && wj["n"] != level)
          throw Failure{SB_E_INVALID_ARGUMENT, "-n differs from the witness degree"};
      }
      check(sb_fiber_product(a.h, b.h, wtext.c_str(), &c.h));
      check(sb_brace_save(c.h, out_path.c_str()));
      std::cout << "fiber product order=" << sb_brace_order(c.h) << "\n";
      return kOk;
    }
    if (*embed) {
      Brace a(file), b(file2), w;
      Text report;
      check(sb_embed(a.h, b.h, slurp(witness_path).c_str(), &w.h, &report.s));
      check(sb_brace_save(w.h, out_path.c_str()));
      if (json)
        print_json(Json::parse(report.str()));
      else
        std::cout << "embedding order=" << sb_brace_order(w.h) << "\n";
      return kOk;
    }
    if (*h2) {
      Brace k(file);
      Text t;
      check(sb_h2_json(k.h, coeff.c_str(), &t.s));
      Json j = Json::parse(t.str());
      if (json)
        print_json(j);
      else
        std::cout << "H2 = " << factors_text(j["factors"]) << " order=" << j["order"] << "\n";
      return kOk;
    }
    if (*extend) {
      Brace k(file), g;
      check(sb_extend(k.h, slurp(cocycle_path).c_str(), &g.h));
      check(sb_brace_save(g.h, out_path.c_str()));
      std::cout << "extension order=" << sb_brace_order(g.h) << "\n";
      return kOk;
    }
    if (*trans) {
      Brace g(file);
      auto v = parse_list(ideal);
      Text t;
      check(sb_transgress_json(g.h, v.data(), v.size(), modulus, &t.s));
      Json j = Json::parse(t.str());
      if (json)
        print_json(j);
      else
        std::cout << "modulus=" << j["modulus"] << " image_order=" << j["image_order"]
                  << " kernel_order=" << j["kernel_order"] << " meet_order=" << j["meet_order"]
                  << " stable=" << (j["stable_under_doubling"].get<bool>() ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*lambda) {
      Brace a(file);
      sb_group* g = nullptr;
      check(sb_lambda_group(a.h, &g));
      Text t;
      sb_status s = sb_group_to_text(g, &t.s);
      std::size_t n = sb_group_order(g);
      sb_group_free(g);
      check(s);
      spill(out_path, t.str());
      std::cout << "group order=" << n << "\n";
      return kOk;
    }
    if (*census) {
      Text summary, rows;
      check(sb_census(order, allow_long, threads, &summary.s, jsonl_path.empty() ? nullptr : &rows.s));
      if (!jsonl_path.empty()) spill(jsonl_path, rows.str() + summary.str() + "\n");
      Json j = Json::parse(summary.str());
      if (json) {
        print_json(j);
      } else {
        std::cout << "order=" << j["order"] << " total=" << j["total"] << " symmetric=" << j["symmetric"]
                  << " non_symmetric=" << j["non_symmetric"] << " in_I2=" << j["in_I2"]
                  << " not_in_I2=" << j["not_in_I2"] << "\n";
      }
      return kOk;
    }
  } catch (const Failure& f) {
    Json e{{"error", sb_status_name(f.status)}, {"message", f.message}};
    std::cerr << e.dump() << "\n";
    return exit_for(f.status);
  } catch (const std::exception& e) {
    Json j{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return kInternal;
  }
  return kUsage;
}

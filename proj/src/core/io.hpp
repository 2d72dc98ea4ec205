#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/cohomology.hpp"
#include "core/enumerate.hpp"
#include "core/isoclinism.hpp"

namespace sbrace {

using Json = nlohmann::ordered_json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct BraceDocument {
  SkewBrace brace;
  Metadata meta;
};

// "skewbrace v1 order=N", N dot rows, a blank line, N circ rows, "# key=value" lines.
BraceDocument parse_brace(std::string_view text);
std::string write_brace(const SkewBrace& a, const Metadata& meta = {});

// "group v1 order=N" followed by N rows.
GroupTable parse_group(std::string_view text);
std::string write_group(const GroupTable& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
BraceDocument load_brace(const std::string& path);

// "Z/2 x Z/4" -> {2, 4}
std::vector<std::int64_t> parse_coefficients(std::string_view text);

Json subset_json(const Subset& s);
Json nilpotency_json(const NilpotencyReport& r);
// series: "all", "skeleton" or a series name; max_n bounds the I_n flags.
Json brace_info_json(const SkewBrace& a, const std::string& series, std::size_t max_n);

// theta is listed along the sorted elements of A_(n).
Json isoclinism_to_json(const Isoclinism& w);
Isoclinism isoclinism_from_json(const Json& j, const SkewBrace& a);

// Entries are indices of abelian_group(coeff).
Json cocycle_to_json(const CocyclePair& p, const std::vector<std::int64_t>& coeff);
CocyclePair cocycle_from_json(const Json& j, const SkewBrace& k);

Json cohomology_json(const CohomologyGroup& h);
Json transgression_json(const TransgressionResult& r);
Json census_row_json(const CensusRow& row);
Json census_summary_json(const CensusSummary& s);
std::string census_summary_line(const CensusSummary& s);

}  // namespace sbrace

#pragma once

// Problem-file ingestion and report serialization for the CLI. Input files
// are JSON with rationals written as "p/q" strings (plain integers are also
// accepted); reports are emitted with sorted keys and string rationals, so
// identical inputs give byte-identical output.

#include <json.hpp>
#include <optional>
#include <string>

#include "torq/inertia.hpp"
#include "torq/quasimap.hpp"
#include "torq/quotient.hpp"
#include "torq/strata.hpp"
#include "torq/weights.hpp"

namespace torq::cli {

using nlohmann::json;

struct ProblemFile {
  WeightSystem ws;
  std::optional<DegreeVector> degree;
  std::optional<Rat> rho;
  std::optional<Rat> area;
  std::optional<Rat> bound;
  std::optional<std::vector<RatVec>> effective_degrees;
  std::optional<RatVec> total_degree;
  std::string raw;  // file bytes, for the digest
};

// Throws std::invalid_argument / json exceptions on malformed input; the
// caller maps those to exit code 2.
ProblemFile load_problem(const std::string& path);

Rat rat_from_json(const json& v);
RatVec rat_vec_from_json(const json& v, int expect_rank = -1);
RatVec parse_rat_list(const std::string& csv);  // "1,2/3" -> vector

std::string fnv1a_digest(const std::string& bytes);

json support_json(const Support& s);                // 1-based indices
json rat_vec_json(const RatVec& v);                 // strings
json quotient_report_json(const QuotientReport& r);
json sector_json(const Sector& s);
json affine_report_json(const WeightSystem& ws, const AffineReport& r);
json tree_json(const ColoredTree& t, int v = -1);
json splitting_json(const Splitting& s);

json report_envelope(const std::string& command, const std::string& path,
                     const std::string& digest, json flags, json result);

}  // namespace torq::cli

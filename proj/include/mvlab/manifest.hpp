#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

inline constexpr std::string_view kManifestFormat = "mvlab-claims";

/// One executable claim. `input` and `expected` are interpreted by kind:
///
///   table               {"connective"}            table (flat or nested value names)
///   dunn-clauses        {"connective"}            true
///   validity            formula text              verdict name, optional "witness"/"countermodel"
///   consequence         sequent text              "valid"|"invalid", optional "flavor"/"witness"/"countermodel"
///   deduction           {"premise","conclusion","conditional"}   [verdict, verdict]
///   classify            {"negation","conditional"}               {flag: bool, "theses": {...}}
///   tspn                {"values","designated"}   list of tables
///   stability           {"conditional"}           {"stable", optional "failure"}
///   definable           {"target", optional "with"}              "yes"|"no", optional "term"
///   closure             {"arity", "bound"}        "sound-complete"
///   fragment-agreement  {"other","connectives","atoms","max_size"} true
struct Claim {
  std::string id;
  std::string logic;
  std::string kind;
  std::string locus;
  nlohmann::json input;
  nlohmann::json expected;
  nlohmann::json extra;  // the whole claim object, for optional fields
};

struct ClaimsManifest {
  std::vector<Claim> claims;
};

/// Throws ConfigError on an empty manifest, unknown kinds or missing fields.
ClaimsManifest manifest_from_json(const nlohmann::json& doc);
ClaimsManifest load_manifest_file(const std::string& path);

/// The claims shipped with the tool.
const ClaimsManifest& builtin_manifest();
const std::string& builtin_manifest_text();

struct ClaimResult {
  std::string id;
  std::string logic;
  std::string kind;
  std::string locus;
  bool pass = false;
  std::string detail;
};

struct ReportResult {
  std::vector<ClaimResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;

  nlohmann::json to_json() const;
};

/// Runs every claim against `registry` (logics looked up by name, or loaded
/// from a path). Errors raised while executing a claim fail that claim.
ReportResult run_manifest(const ClaimsManifest& manifest, const std::vector<Logic>& registry,
                          bool stop_at_first_failure = false);

}  // namespace mvlab

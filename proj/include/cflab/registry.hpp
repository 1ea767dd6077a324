#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cflab/cf_engine.hpp"
#include "cflab/constants.hpp"
#include "cflab/hparams.hpp"
#include "cflab/petkovsek.hpp"

namespace cflab {

struct SolutionSeed {
  std::string ratio_text;
  Rational y0;
  HypergeometricTerm term;
};

struct ConjectureEntry {
  std::string id;
  std::string a_text, b_text;
  CFSpec cf;
  ClosedFormConstant rhs;
  std::optional<ClosedFormConstant> alternate_rhs;
  std::string source;
  std::optional<HParams> h_params;
  std::optional<SolutionSeed> solution;
  std::string notes;
};

/// The 38 built-in entries, checked on first use.
const std::vector<ConjectureEntry>& builtin_registry();

/// Parses and checks a registry document ({"entries": [...]}).
/// Throws SchemaError or ParseError naming the entry and field.
std::vector<ConjectureEntry> parse_registry(const nlohmann::json& doc);
std::vector<ConjectureEntry> load_registry_file(const std::string& path);

/// Built-ins with entries of `extra` replacing those with the same id and
/// new ids appended; result sorted by id.
std::vector<ConjectureEntry> merge_registry(std::vector<ConjectureEntry> base,
                                            const std::vector<ConjectureEntry>& extra);

nlohmann::json entry_to_json(const ConjectureEntry& e);

/// Natural ordering: "cor2.9" < "cor2.10" < "thm3.1".
bool id_less(const std::string& a, const std::string& b);

const ConjectureEntry* find_entry(const std::vector<ConjectureEntry>& entries, const std::string& id);

}  // namespace cflab

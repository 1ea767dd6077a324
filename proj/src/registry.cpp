#include "cflab/registry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cflab/errors.hpp"
#include "cflab/parser.hpp"

namespace cflab {

extern const char* const kBuiltinRegistryJson;

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& id, const std::string& field, const std::string& what) {
  throw SchemaError("entry '" + id + "', field '" + field + "': " + what);
}

/// obj[key]; `field` is the dotted path used in messages (defaults to key).
const json& require(const json& obj, const std::string& id, const std::string& field) {
  std::string key = field.substr(field.rfind('.') == std::string::npos ? 0 : field.rfind('.') + 1);
  if (!obj.contains(key)) schema_fail(id, field, "missing");
  return obj.at(key);
}

std::string require_string(const json& obj, const std::string& id, const std::string& field) {
  const json& v = require(obj, id, field);
  if (!v.is_string()) schema_fail(id, field, "expected a string");
  return v.get<std::string>();
}

Rational field_rational(const json& v, const std::string& id, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema_fail(id, field, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    schema_fail(id, field, e.what());
  }
}

Polynomial field_poly(const std::string& text, const std::string& id, const std::string& field) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError("entry '" + id + "', field '" + field + "': " + e.what(), e.position());
  }
}

std::map<BaseConstant, Rational> parse_combo(const json& v, const std::string& id, const std::string& field) {
  if (!v.is_object()) schema_fail(id, field, "expected an object of constant coefficients");
  std::map<BaseConstant, Rational> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    auto c = constant_from_name(it.key());
    if (!c) schema_fail(id, field + "." + it.key(), "unknown constant");
    out[*c] = field_rational(it.value(), id, field + "." + it.key());
  }
  return out;
}

ClosedFormConstant parse_closed_form(const json& v, const std::string& id, const std::string& field) {
  if (!v.is_object()) schema_fail(id, field, "expected an object");
  ClosedFormConstant c;
  c.numerator = parse_combo(require(v, id, field + ".numerator"), id, field + ".numerator");
  c.denominator = parse_combo(require(v, id, field + ".denominator"), id, field + ".denominator");
  bool nonzero = std::any_of(c.denominator.begin(), c.denominator.end(),
                             [](const auto& kv) { return kv.second != 0; });
  if (!nonzero) schema_fail(id, field + ".denominator", "must be nonempty");
  return c;
}

json combo_to_json(const std::map<BaseConstant, Rational>& m) {
  json o = json::object();
  for (BaseConstant c : all_base_constants()) {
    auto it = m.find(c);
    if (it != m.end()) o[constant_name(c)] = to_string(it->second);
  }
  return o;
}

json closed_form_to_json(const ClosedFormConstant& c) {
  return {{"numerator", combo_to_json(c.numerator)}, {"denominator", combo_to_json(c.denominator)}};
}

ConjectureEntry parse_entry(const json& e) {
  if (!e.is_object()) throw SchemaError("registry entry is not an object");
  std::string id = "?";
  if (e.contains("id") && e["id"].is_string()) id = e["id"].get<std::string>();
  ConjectureEntry out;
  out.id = require_string(e, id, "id");
  if (out.id.empty()) schema_fail(id, "id", "empty");
  out.a_text = require_string(e, id, "a_text");
  out.b_text = require_string(e, id, "b_text");
  out.cf = {field_poly(out.a_text, id, "a_text"), field_poly(out.b_text, id, "b_text")};
  out.rhs = parse_closed_form(require(e, id, "rhs"), id, "rhs");
  out.source = require_string(e, id, "source");
  out.notes = require_string(e, id, "notes");
  if (e.contains("alternate_rhs") && !e["alternate_rhs"].is_null())
    out.alternate_rhs = parse_closed_form(e["alternate_rhs"], id, "alternate_rhs");

  const json& hp = require(e, id, "h_params");
  if (!hp.is_null()) {
    if (!hp.is_object()) schema_fail(id, "h_params", "expected an object or null");
    out.h_params = HParams{field_rational(require(hp, id, "h_params.alpha"), id, "h_params.alpha"),
                           field_rational(require(hp, id, "h_params.beta"), id, "h_params.beta"),
                           field_rational(require(hp, id, "h_params.gamma"), id, "h_params.gamma")};
  }
  const json& sol = require(e, id, "solution");
  if (!sol.is_null()) {
    if (!sol.is_object()) schema_fail(id, "solution", "expected an object or null");
    SolutionSeed seed;
    seed.ratio_text = require_string(sol, id, "solution.ratio");
    seed.y0 = field_rational(require(sol, id, "solution.y0"), id, "solution.y0");
    RationalFunction ratio;
    try {
      ratio = parse_ratfun(seed.ratio_text);
    } catch (const ParseError& err) {
      throw ParseError("entry '" + id + "', field 'solution.ratio': " + err.what(), err.position());
    } catch (const DomainError& err) {
      schema_fail(id, "solution.ratio", err.what());
    }
    if (ratio.is_zero()) schema_fail(id, "solution.ratio", "zero ratio");
    seed.term = make_term(ratio, seed.y0);
    out.solution = std::move(seed);
  }

  // Load-time consistency checks.
  if (out.cf.b.is_zero() || out.cf.b.degree() != 2 * out.cf.a.degree())
    schema_fail(id, "b_text", "deg b must equal 2 deg a");
  if (out.h_params) {
    if (out.h_params->has_pole()) schema_fail(id, "h_params", "pole parameters");
    CFSpec expect = h_cf(*out.h_params);
    if (expect.a != out.cf.a || expect.b != out.cf.b)
      schema_fail(id, "h_params", "does not reproduce a_text/b_text (expected " + expect.a.render() + ", " +
                                      expect.b.render() + ")");
  }
  if (out.solution && !certify(Recurrence2::from_cf(out.cf), out.solution->term))
    schema_fail(id, "solution", "ratio does not satisfy the recurrence");
  return out;
}

}  // namespace

bool id_less(const std::string& a, const std::string& b) {
  // Compare alternating non-digit / digit runs, digits numerically.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      Integer x(a.substr(i, i2 - i)), y(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::vector<ConjectureEntry> parse_registry(const json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw SchemaError("registry document must be an object with an 'entries' array");
  std::vector<ConjectureEntry> out;
  for (const auto& e : doc["entries"]) {
    ConjectureEntry entry = parse_entry(e);
    if (find_entry(out, entry.id)) schema_fail(entry.id, "id", "duplicate");
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return id_less(x.id, y.id); });
  return out;
}

std::vector<ConjectureEntry> load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open registry file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("registry file is not valid JSON: ") + e.what());
  }
  return parse_registry(doc);
}

const std::vector<ConjectureEntry>& builtin_registry() {
  static const std::vector<ConjectureEntry> entries = parse_registry(json::parse(kBuiltinRegistryJson));
  return entries;
}

std::vector<ConjectureEntry> merge_registry(std::vector<ConjectureEntry> base,
                                            const std::vector<ConjectureEntry>& extra) {
  for (const auto& e : extra) {
    auto it = std::find_if(base.begin(), base.end(), [&](const auto& b) { return b.id == e.id; });
    if (it != base.end())
      *it = e;
    else
      base.push_back(e);
  }
  std::sort(base.begin(), base.end(), [](const auto& x, const auto& y) { return id_less(x.id, y.id); });
  return base;
}

const ConjectureEntry* find_entry(const std::vector<ConjectureEntry>& entries, const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

nlohmann::json entry_to_json(const ConjectureEntry& e) {
  json o;
  o["id"] = e.id;
  o["a_text"] = e.a_text;
  o["b_text"] = e.b_text;
  o["rhs"] = closed_form_to_json(e.rhs);
  o["source"] = e.source;
  if (e.h_params)
    o["h_params"] = {{"alpha", to_string(e.h_params->alpha)},
                     {"beta", to_string(e.h_params->beta)},
                     {"gamma", to_string(e.h_params->gamma)}};
  else
    o["h_params"] = nullptr;
  if (e.solution)
    o["solution"] = {{"ratio", e.solution->ratio_text}, {"y0", to_string(e.solution->y0)}};
  else
    o["solution"] = nullptr;
  o["notes"] = e.notes;
  if (e.alternate_rhs) o["alternate_rhs"] = closed_form_to_json(*e.alternate_rhs);
  return o;
}

}  // namespace cflab

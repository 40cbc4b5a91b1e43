#include "hyperfuzzy/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy {

namespace {

using Json = report::Json;

[[noreturn]] void invalid(const std::string& message) { throw ValidationError(message); }

std::string location(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the last byte read.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double number_field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(where + ": missing \"" + key + "\"");
  if (!it->is_number()) invalid(where + ": \"" + key + "\" must be a number");
  return it->get<double>();
}

Hyp parse_entry(const Json& entry, const std::string& where) {
  if (!entry.is_object() || entry.size() != 2) {
    invalid(where + ": expected {\"e1\": u, \"e2\": v} or {\"a1\": x, \"a2\": y}");
  }
  if (entry.contains("e1") || entry.contains("e2")) {
    return Hyp(number_field(entry, "e1", where), number_field(entry, "e2", where));
  }
  if (entry.contains("a1") || entry.contains("a2")) {
    return Hyp::from_standard(number_field(entry, "a1", where), number_field(entry, "a2", where));
  }
  invalid(where + ": expected {\"e1\": u, \"e2\": v} or {\"a1\": x, \"a2\": y}");
}

UniversePtr parse_universe(const Json& j) {
  if (!j.is_object()) invalid("\"universe\" must be an object");
  const auto dim_it = j.find("dim");
  if (dim_it == j.end() || !dim_it->is_number_integer() || dim_it->get<long long>() < 1) {
    invalid("universe: \"dim\" must be a positive integer");
  }
  const auto dim = dim_it->get<std::size_t>();
  const auto pts = j.find("points");
  if (pts == j.end() || !pts->is_array()) invalid("universe: \"points\" must be an array");
  std::vector<double> coords;
  coords.reserve(pts->size() * dim);
  for (std::size_t i = 0; i < pts->size(); ++i) {
    const Json& p = (*pts)[i];
    // 1-D points may be written as bare numbers.
    if (dim == 1 && p.is_number()) {
      coords.push_back(p.get<double>());
      continue;
    }
    if (!p.is_array() || p.size() != dim) {
      invalid("universe: point " + std::to_string(i) + " must have " + std::to_string(dim) + " coordinates");
    }
    for (const Json& c : p) {
      if (!c.is_number()) invalid("universe: point " + std::to_string(i) + " has a non-numeric coordinate");
      coords.push_back(c.get<double>());
    }
  }
  std::vector<std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) invalid("universe: \"labels\" must be an array of strings");
    for (const Json& l : *it) {
      if (!l.is_string()) invalid("universe: \"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Universe::create(dim, std::move(coords), std::move(labels));
}

Json entry_json(const Hyp& x, HypForm form) {
  Json j;
  if (form == HypForm::Standard) {
    const StandardForm s = x.to_standard();
    j["a1"] = report::real(s.a1);
    j["a2"] = report::real(s.a2);
  } else {
    j["e1"] = report::real(x.u());
    j["e2"] = report::real(x.v());
  }
  return j;
}

Json values_json(const DFuzzySet& s) {
  Json j = Json::array();
  for (const Hyp& x : s.values()) j.push_back(report::hyp(x));
  return j;
}

}  // namespace

bool Document::contains(std::string_view name) const {
  return std::any_of(sets_.begin(), sets_.end(), [name](const auto& kv) { return kv.first == name; });
}

const DFuzzySet& Document::get(std::string_view name) const {
  for (const auto& [key, set] : sets_) {
    if (key == name) return set;
  }
  std::string known;
  for (const auto& kv : sets_) known += (known.empty() ? "" : ", ") + kv.first;
  throw UsageError("unknown set '" + std::string(name) + "'" + (known.empty() ? "" : " (document has: " + known + ")"));
}

void Document::put(std::string name, DFuzzySet set) {
  if (!same_universe(set.universe(), *universe_)) {
    throw UniverseMismatch("set '" + name + "' is not defined on the document universe");
  }
  for (auto& kv : sets_) {
    if (kv.first == name) {
      kv.second = std::move(set);
      return;
    }
  }
  sets_.emplace_back(std::move(name), std::move(set));
}

Document parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's own "[json.exception...] parse error at line.., column..: " prefix.
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(location(text, e.byte) + ": " + what);
  }
  if (!root.is_object()) invalid("document must be a JSON object");

  const auto version = root.find("version");
  if (version == root.end()) invalid("missing \"version\"");
  if (!version->is_number_integer() || version->get<long long>() != kDocumentVersion) {
    invalid("unsupported version " + version->dump() + " (expected " + std::to_string(kDocumentVersion) + ")");
  }

  OrderMode mode = OrderMode::Lattice;
  if (const auto it = root.find("default_mode"); it != root.end()) {
    if (!it->is_string()) invalid("\"default_mode\" must be \"lattice\" or \"strict\"");
    try {
      mode = parse_order_mode(it->get<std::string>());
    } catch (const ParseError& e) {
      invalid(std::string("default_mode: ") + e.what());
    }
  }

  const auto universe = root.find("universe");
  if (universe == root.end()) invalid("missing \"universe\"");
  Document doc(parse_universe(*universe), mode);

  const auto sets = root.find("sets");
  if (sets == root.end()) return doc;
  if (!sets->is_object()) invalid("\"sets\" must be an object");
  for (auto it = sets->begin(); it != sets->end(); ++it) {
    const std::string where = "set '" + it.key() + "'";
    const Json& body = it.value();
    if (!body.is_object() || !body.contains("values") || !body["values"].is_array()) {
      invalid(where + ": expected {\"values\": [...]}");
    }
    const Json& values = body["values"];
    if (values.size() != doc.universe()->size()) {
      invalid(where + ": has " + std::to_string(values.size()) + " values but the universe has " +
              std::to_string(doc.universe()->size()) + " points");
    }
    std::vector<Hyp> grades;
    for (std::size_t i = 0; i < values.size(); ++i) {
      try {
        grades.push_back(parse_entry(values[i], where + " point " + std::to_string(i)));
      } catch (const InvalidNumber& e) {
        invalid(where + " point " + std::to_string(i) + ": " + e.what());
      }
    }
    try {
      doc.put(it.key(), DFuzzySet(doc.universe(), std::move(grades)));
    } catch (const RangeError& e) {
      invalid(where + ": " + e.what());
    }
  }
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string dump_document(const Document& doc, HypForm form) {
  const Universe& u = *doc.universe();
  Json root;
  root["version"] = kDocumentVersion;
  root["default_mode"] = std::string(to_string(doc.default_mode()));
  Json uj;
  uj["dim"] = u.dim();
  Json pts = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    Json p = Json::array();
    for (double c : u.point(i)) p.push_back(report::real(c));
    pts.push_back(std::move(p));
  }
  uj["points"] = std::move(pts);
  if (u.has_labels()) uj["labels"] = u.labels();
  root["universe"] = std::move(uj);
  Json sets = Json::object();
  for (const auto& [name, set] : doc.sets()) {
    Json values = Json::array();
    for (const Hyp& x : set.values()) values.push_back(entry_json(x, form));
    sets[name]["values"] = std::move(values);
  }
  root["sets"] = std::move(sets);
  return root.dump(2) + "\n";
}

void save_document(const Document& doc, const std::filesystem::path& path, HypForm form) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << dump_document(doc, form);
  if (!out) throw UsageError("write failed for '" + path.string() + "'");
}

const std::vector<std::pair<std::string, std::size_t>>& document_ops() {
  static const std::vector<std::pair<std::string, std::size_t>> ops = {
      {"complement", 1},          {"union", 2},
      {"intersection", 2},        {"algebraic_sum", 2},
      {"algebraic_product", 2},   {"absolute_difference", 2},
      {"convex_combination", 3},  {"cartesian", 2},
  };
  return ops;
}

OpResult run_op(const Document& doc, std::string_view op, std::span<const std::string> names,
                std::optional<OrderMode> mode_opt, const std::string& out_name, const Document* other) {
  const auto& ops = document_ops();
  const auto spec = std::find_if(ops.begin(), ops.end(), [op](const auto& kv) { return kv.first == op; });
  if (spec == ops.end()) {
    std::string known;
    for (const auto& kv : ops) known += (known.empty() ? "" : ", ") + kv.first;
    throw UsageError("unknown op '" + std::string(op) + "' (known: " + known + ")");
  }
  if (names.size() != spec->second) {
    throw UsageError("op '" + std::string(op) + "' takes " + std::to_string(spec->second) + " set name(s), got " +
                     std::to_string(names.size()));
  }
  if (out_name.empty()) throw UsageError("empty output set name");
  const OrderMode mode = mode_opt.value_or(doc.default_mode());

  Json rep;
  rep["op"] = std::string(op);
  rep["mode"] = std::string(to_string(mode));
  rep["operands"] = std::vector<std::string>(names.begin(), names.end());
  rep["result"] = out_name;

  if (op == "cartesian") {
    const DFuzzySet& a = doc.get(names[0]);
    const DFuzzySet& b = (other ? *other : doc).get(names[1]);
    const std::size_t incomparable = count_incomparable_pairs(a, b);
    DFuzzySet product = cartesian_product(a, b, mode);
    Document result(product.universe_ptr(), doc.default_mode());
    rep["incomparable_pairs"] = incomparable;
    rep["lattice_extension_used"] = mode == OrderMode::Lattice && incomparable > 0;
    rep["values"] = values_json(product);
    result.put(out_name, std::move(product));
    return {std::move(result), std::move(rep)};
  }

  if (other != nullptr) throw UsageError("a second document is only used by 'cartesian'");
  std::vector<const DFuzzySet*> args;
  for (const auto& n : names) args.push_back(&doc.get(n));

  auto lattice_note = [&](std::size_t incomparable) {
    rep["incomparable_points"] = incomparable;
    rep["lattice_extension_used"] = mode == OrderMode::Lattice && incomparable > 0;
  };

  std::optional<DFuzzySet> out;
  if (op == "complement") {
    out = complement(*args[0]);
  } else if (op == "union") {
    lattice_note(count_incomparable(*args[0], *args[1]));
    out = unite(*args[0], *args[1], mode);
  } else if (op == "intersection") {
    lattice_note(count_incomparable(*args[0], *args[1]));
    out = intersect(*args[0], *args[1], mode);
  } else if (op == "algebraic_sum") {
    out = algebraic_sum(*args[0], *args[1]);
  } else if (op == "algebraic_product") {
    out = algebraic_product(*args[0], *args[1]);
  } else if (op == "absolute_difference") {
    out = absolute_difference(*args[0], *args[1]);
  } else {
    out = convex_combination(*args[0], *args[1], *args[2]);
  }
  rep["values"] = values_json(*out);
  Document result = doc;
  result.put(out_name, std::move(*out));
  return {std::move(result), std::move(rep)};
}

}  // namespace hyperfuzzy

#include "hyperfuzzy/report.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy::report {

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "-";
  if (j.is_number_float()) return format_real(j.get<double>());
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_object(const Json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), [](const Json& v) {
           return is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar));
         });
}

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string out;
  for (const auto& item : j) {
    if (!out.empty()) out += ", ";
    out += scalar_text(item);
  }
  return out;
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  const Json& first = j.front();
  if (!is_flat_object(first)) return false;
  return std::all_of(j.begin(), j.end(), [&first](const Json& row) {
    if (!is_flat_object(row) || row.size() != first.size()) return false;
    auto a = row.begin();
    for (auto b = first.begin(); b != first.end(); ++a, ++b) {
      if (a.key() != b.key()) return false;
    }
    return true;
  });
}

void render_table(const Json& rows, const std::string& pad, std::ostream& out) {
  std::vector<std::string> header;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) header.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    std::size_t c = 0;
    for (const auto& v : row) {
      line.push_back(inline_text(v));
      width[c] = std::max(width[c], line.back().size());
      ++c;
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text = pad;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
}

void render_object(const Json& j, std::size_t depth, std::ostream& out);

void render_value(const std::string& key, const Json& v, std::size_t depth, std::ostream& out) {
  const std::string pad(depth * 2, ' ');
  if (is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar))) {
    out << pad << key << ": " << inline_text(v) << '\n';
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    render_object(v, depth + 1, out);
  } else if (is_table(v)) {
    out << pad << key << ":\n";
    render_table(v, pad + "  ", out);
  } else {
    out << pad << key << ":\n";
    for (const auto& item : v) {
      if (item.is_object()) {
        std::ostringstream nested;
        render_object(item, depth + 2, nested);
        std::string text = nested.str();
        text.replace(depth * 2 + 2, 2, "- ");
        out << text;
      } else {
        out << pad << "  - " << inline_text(item) << '\n';
      }
    }
  }
}

void render_object(const Json& j, std::size_t depth, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), it.value(), depth, out);
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "structured") return Format::Structured;
  throw UsageError("unknown format '" + std::string(text) + "' (expected text or structured)");
}

Json real(double x) { return std::stod(format_real(x)); }

Json hyp(const Hyp& x) { return to_string(x); }

Json point(const Universe& universe, std::size_t index) {
  Json j;
  j["index"] = index;
  Json coords = Json::array();
  for (double c : universe.point(index)) coords.push_back(real(c));
  j["coords"] = std::move(coords);
  if (universe.has_labels()) j["label"] = universe.labels()[index];
  return j;
}

Json points(const Universe& universe, std::span<const std::size_t> indices) {
  Json j = Json::array();
  for (std::size_t i : indices) j.push_back(point(universe, i));
  return j;
}

Json hyperplane(const Hyperplane& h) {
  Json j;
  j["axis"] = h.axis;
  j["threshold"] = real(h.threshold);
  return j;
}

Json convexity(const Universe& universe, const ConvexityReport& r) {
  Json j;
  j["convex"] = r.convex;
  j["alphas_tested"] = r.alphas_tested.size();
  if (r.incomparable_pairs > 0) j["incomparable_pairs"] = r.incomparable_pairs;
  if (r.witness) {
    const ConvexityWitness& w = *r.witness;
    Json wj;
    wj["first"] = point(universe, w.first);
    wj["between"] = point(universe, w.between);
    wj["second"] = point(universe, w.second);
    wj["lambda"] = real(w.lambda);
    if (w.alpha) wj["alpha"] = hyp(*w.alpha);
    j["witness"] = std::move(wj);
  }
  return j;
}

Json separation(const SeparationReport& r) {
  Json j;
  j["D"] = hyp(r.best_degree);
  j["M"] = hyp(r.intersection_max);
  j["hyperplane_e1"] = hyperplane(r.best_hyperplane_u);
  j["hyperplane_e2"] = hyperplane(r.best_hyperplane_v);
  j["joint_D"] = hyp(r.joint_best_degree);
  j["joint_hyperplane"] = hyperplane(r.joint_hyperplane);
  return j;
}

Json suites(const std::vector<testkit::SuiteResult>& results) {
  Json rows = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    Json row;
    row["suite"] = r.name;
    row["trials"] = r.trials;
    row["failures"] = r.failures;
    row["status"] = r.passed() ? "PASS" : "FAIL";
    row["first_counterexample"] = r.first_counterexample.empty() ? "-" : r.first_counterexample;
    rows.push_back(std::move(row));
    if (!r.passed()) ++failed;
  }
  Json j;
  j["results"] = std::move(rows);
  j["passed"] = failed == 0;
  j["failed_checks"] = failed;
  return j;
}

void render(const Json& report, Format format, std::ostream& out) {
  if (format == Format::Structured) {
    out << report.dump(2) << '\n';
    return;
  }
  render_object(report, 0, out);
}

}  // namespace hyperfuzzy::report

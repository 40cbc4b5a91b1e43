#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperfuzzy/convex.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/props.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy::report {

using Json = nlohmann::ordered_json;

enum class Format : std::uint8_t { Text, Structured };

/// "text" / "structured". Throws UsageError.
Format parse_format(std::string_view text);

/// Real rounded to 12 significant digits.
Json real(double x);
/// Idempotent-form string.
Json hyp(const Hyp& x);
Json point(const Universe& universe, std::size_t index);
Json points(const Universe& universe, std::span<const std::size_t> indices);
Json hyperplane(const Hyperplane& h);

Json convexity(const Universe& universe, const ConvexityReport& r);
Json separation(const SeparationReport& r);
Json suites(const std::vector<testkit::SuiteResult>& results);

/// Text: one "key: value" line per scalar, nested objects indented, arrays of
/// flat objects as aligned tables. Structured: the same object as JSON.
void render(const Json& report, Format format, std::ostream& out);

}  // namespace hyperfuzzy::report

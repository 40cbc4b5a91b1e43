#pragma once

/**
 * @file document.hpp
 * @brief JSON documents holding one universe and a set of named D-fuzzy sets.
 *
 *   {
 *     "version": 1,
 *     "default_mode": "lattice",
 *     "universe": {"dim": 2, "points": [[5, 2], [5, 0]], "labels": ["5e1+2e2", "5"]},
 *     "sets": {"A": {"values": [{"e1": 0.06, "e2": 0.04}, {"a1": 0.065, "a2": -0.005}]}}
 *   }
 *
 * Membership entries use idempotent ({"e1", "e2"}) or standard ({"a1", "a2"})
 * coordinates. Set order is preserved on save.
 */

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/report.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy {

inline constexpr int kDocumentVersion = 1;

class Document {
 public:
  explicit Document(UniversePtr universe, OrderMode default_mode = OrderMode::Lattice)
      : universe_(std::move(universe)), default_mode_(default_mode) {}

  const UniversePtr& universe() const { return universe_; }
  OrderMode default_mode() const { return default_mode_; }

  const std::vector<std::pair<std::string, DFuzzySet>>& sets() const { return sets_; }
  bool contains(std::string_view name) const;
  /// Throws UsageError naming the missing set.
  const DFuzzySet& get(std::string_view name) const;
  /// Inserts or replaces. The set must live on this document's universe
  /// (UniverseMismatch otherwise).
  void put(std::string name, DFuzzySet set);

 private:
  UniversePtr universe_;
  OrderMode default_mode_;
  std::vector<std::pair<std::string, DFuzzySet>> sets_;
};

/// Throws ParseError ("line L, column C: ...") for malformed JSON and
/// ValidationError for schema or range problems (naming set and point).
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Numbers are written with 12 significant digits.
std::string dump_document(const Document& doc, HypForm form = HypForm::Idempotent);
void save_document(const Document& doc, const std::filesystem::path& path,
                   HypForm form = HypForm::Idempotent);

/// Operation names accepted by run_op, with their arity.
const std::vector<std::pair<std::string, std::size_t>>& document_ops();

struct OpResult {
  Document document;
  report::Json report;
};

/**
 * Applies `op` to the named sets and stores the result under `out_name`.
 *
 * For "cartesian" the second operand comes from `other` when given; the
 * result document lives on the product universe and holds only the product.
 * Every other op returns a copy of `doc` with the result added.
 */
OpResult run_op(const Document& doc, std::string_view op, std::span<const std::string> names,
                std::optional<OrderMode> mode, const std::string& out_name,
                const Document* other = nullptr);

}  // namespace hyperfuzzy

#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy::test {

inline DFuzzySet pairs(const UniversePtr& u, std::initializer_list<std::pair<double, double>> values) {
  std::vector<Hyp> out;
  for (const auto& [a, b] : values) out.emplace_back(a, b);
  return DFuzzySet(u, std::move(out));
}

/// Equal-component memberships.
inline DFuzzySet diag(const UniversePtr& u, std::initializer_list<double> values) {
  std::vector<Hyp> out;
  for (double x : values) out.push_back(Hyp::real(x));
  return DFuzzySet(u, std::move(out));
}

inline std::vector<std::size_t> idx(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace hyperfuzzy::test

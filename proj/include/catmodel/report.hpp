#pragma once

#include <string>
#include <utility>
#include <vector>

namespace catmodel {

struct Violation {
  std::string law;
  std::vector<std::string> witness;

  bool operator==(const Violation&) const = default;
};

/// Outcome of an exhaustive law check. `ok()` iff no violations were found.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string law, std::vector<std::string> witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }

  std::size_t count(const std::string& law) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.law == law ? 1 : 0;
    return n;
  }
};

}  // namespace catmodel

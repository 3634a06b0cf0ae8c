#pragma once

#include <string>
#include <vector>

#include "catmodel/category.hpp"

namespace catmodel {

/// One object `x`, only its identity.
FinCategory terminal_category();

/// Two objects a, b and a single non-identity arrow f : a -> b.
FinCategory arrow_category();

/// Divisors of n ordered by divisibility: one morphism `d<a>_<b>` for a | b,
/// identities are `id_<a>`.
FinCategory divisor_poset(unsigned n);

FinCategory d8_category();
FinCategory windowpane_category();

struct NamedCategory {
  std::string name;
  FinCategory category;
};

/// The reference categories: O, M, D8, windowpane, divisors of 12.
std::vector<NamedCategory> corpus();

}  // namespace catmodel

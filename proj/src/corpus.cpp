#include "catmodel/corpus.hpp"

#include "catmodel/action.hpp"

namespace catmodel {

FinCategory terminal_category() {
  CategoryBuilder b;
  b.add_identity(b.add_object("x"));
  b.complete_unit_composites();
  return b.build();
}

FinCategory arrow_category() {
  CategoryBuilder b;
  const auto a = b.add_object("a");
  const auto c = b.add_object("b");
  b.add_identity(a);
  b.add_identity(c);
  b.add_morphism("f", a, c);
  b.complete_unit_composites();
  return b.build();
}

FinCategory divisor_poset(unsigned n) {
  CategoryBuilder b;
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  std::vector<ObjId> obj;
  for (auto d : divisors) obj.push_back(b.add_object(std::to_string(d)));

  // arrow[i][j] exists iff divisors[i] | divisors[j].
  std::vector<std::vector<std::optional<MorId>>> arrow(divisors.size(),
                                                       std::vector<std::optional<MorId>>(divisors.size()));
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if (divisors[j] % divisors[i] != 0) continue;
      const auto name = i == j ? "id_" + std::to_string(divisors[i])
                               : "d" + std::to_string(divisors[i]) + "_" + std::to_string(divisors[j]);
      arrow[i][j] = b.add_morphism(name, obj[i], obj[j]);
      if (i == j) b.set_identity(obj[i], *arrow[i][j]);
    }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = 0; j < divisors.size(); ++j)
      for (std::size_t k = 0; k < divisors.size(); ++k)
        if (arrow[i][j] && arrow[j][k]) b.set_composite(*arrow[i][j], *arrow[j][k], *arrow[i][k]);
  return b.build();
}

FinCategory d8_category() { return monoid_to_category(builtin_d8().monoid); }

FinCategory windowpane_category() { return monoid_to_category(builtin_windowpane().monoid); }

std::vector<NamedCategory> corpus() {
  return {
      {"O", terminal_category()},
      {"M", arrow_category()},
      {"D8", d8_category()},
      {"windowpane", windowpane_category()},
      {"divisors12", divisor_poset(12)},
  };
}

}  // namespace catmodel

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catmodel/category.hpp"
#include "catmodel/matrix.hpp"
#include "catmodel/report.hpp"

namespace catmodel {

/// A finite monoid as a Cayley table. `table[e * size + f]` is "e then f".
struct FinMonoid {
  std::vector<std::string> elements;
  std::size_t unit = 0;
  std::vector<std::size_t> table;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t operator()(std::size_t e, std::size_t f) const { return table.at(e * size() + f); }
  std::size_t index_of(std::string_view name) const;  // throws StructuralError

  bool operator==(const FinMonoid&) const = default;
};

/// Unit and associativity laws over all elements. Throws StructuralError for
/// a table of the wrong size or with out-of-range entries.
ValidationReport check_monoid(const FinMonoid& m);

/// One object named `object_name`, one morphism per element. Throws
/// StructuralError listing the broken laws when `m` is not a monoid.
FinCategory monoid_to_category(const FinMonoid& m, const std::string& object_name = "star");

/// A monoid acting on a finite carrier: act[e][p] is the image of point p
/// under e. Applying e then f equals acting by table(e, f).
struct SetAction {
  FinMonoid monoid;
  std::vector<std::string> carrier;
  std::vector<std::vector<std::size_t>> act;

  std::size_t point_index(std::string_view name) const;  // throws UnknownPointError
};

ValidationReport check_action(const SetAction& a);

/// rep[e] is an n x n matrix; rep(table(e, f)) = rep(e) * rep(f).
struct MatRepresentation {
  FinMonoid monoid;
  std::size_t dim = 0;
  std::vector<RatMatrix> rep;
};

ValidationReport check_representation(const MatRepresentation& r);

/// Points reachable from `point`, sorted in carrier order.
std::vector<std::size_t> orbit(const SetAction& a, std::size_t point);

/// Builds the monoid generated by composing permutations of `carrier` in
/// diagrammatic order. Each permutation lists images of the carrier points;
/// element names are taken from `names`. Throws StructuralError if the set is
/// not closed under composition or contains no identity.
struct PermutationMonoid {
  FinMonoid monoid;
  SetAction action;
};
PermutationMonoid monoid_from_functions(std::vector<std::string> names,
                                        std::vector<std::string> carrier,
                                        std::vector<std::vector<std::size_t>> functions);

struct D8 {
  FinMonoid monoid;
  SetAction vertices;  // on {A, B, C, D}
};

/// The symmetries of the square, acting on its corner labels.
D8 builtin_d8();

struct Windowpane {
  FinMonoid monoid;
  SetAction corners;  // on {A, B, C, D}
  MatRepresentation representation;
};

/// The crush monoid {I, V, H, T}, its 2x2 matrix representation, and the
/// corner action obtained by applying the matrices to corner coordinates.
Windowpane builtin_windowpane();

/// Corner coordinates used by the windowpane: A=(0,1) B=(1,1) C=(0,0) D=(1,0).
RatMatrix windowpane_corner(std::size_t index);

}  // namespace catmodel

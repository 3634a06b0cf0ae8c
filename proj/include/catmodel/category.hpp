#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmodel/report.hpp"

namespace catmodel {

struct ObjId {
  std::uint32_t index = 0;
  auto operator<=>(const ObjId&) const = default;
};

struct MorId {
  std::uint32_t index = 0;
  auto operator<=>(const MorId&) const = default;
};

/// Bounds for exhaustive checks.
struct Limits {
  std::size_t max_morphisms = 512;
};

/// A finite category presented by an explicit composition table.
///
/// Composition is diagrammatic: `composite(g, h)` is "g then h" and is
/// defined exactly when cod(g) == dom(h). The table may have gaps (reported
/// by check_category), but every entry present is structurally sound.
/// Objects and morphisms keep their declaration order, which is the
/// canonical order for every enumeration in the library.
class FinCategory {
 public:
  FinCategory() = default;

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  const std::string& name(ObjId a) const { return objects_.at(a.index); }
  const std::string& name(MorId m) const { return morphisms_.at(m.index).name; }
  ObjId dom(MorId m) const { return morphisms_.at(m.index).dom; }
  ObjId cod(MorId m) const { return morphisms_.at(m.index).cod; }

  std::optional<MorId> identity(ObjId a) const { return identities_.at(a.index); }
  bool is_identity(MorId m) const;

  /// Raw table lookup; empty for non-composable pairs and for gaps.
  std::optional<MorId> composite(MorId g, MorId h) const;

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  std::vector<ObjId> objects() const;
  std::vector<MorId> morphisms() const;

  /// Morphisms a -> b in declaration order.
  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return hom_.at(a.index * objects_.size() + b.index);
  }

  /// Composable pairs whose table entry is missing.
  std::vector<std::pair<MorId, MorId>> composition_gaps() const;

  bool operator==(const FinCategory&) const = default;

 private:
  friend class CategoryBuilder;

  struct Morphism {
    std::string name;
    ObjId dom;
    ObjId cod;
    bool operator==(const Morphism&) const = default;
  };

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::optional<MorId>> identities_;
  std::vector<std::optional<MorId>> table_;  // row-major, morphism_count^2
  std::vector<std::vector<MorId>> hom_;      // object_count^2
};

/// Incremental construction of a FinCategory. `build()` validates structure
/// and throws StructuralError on duplicate names, unresolved ids, identity
/// entries that are not endomorphisms, and table entries with wrong typing.
class CategoryBuilder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId dom, ObjId cod);
  void set_identity(ObjId a, MorId id);
  void set_composite(MorId g, MorId h, MorId result);

  /// Adds a morphism `id_<name>` : a -> a and registers it as the identity.
  MorId add_identity(ObjId a);
  /// Adds `g;id = g` and `id;g = g` for every morphism where no entry exists.
  void complete_unit_composites();

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  bool has_composite(MorId g, MorId h) const;

  FinCategory build() const;

 private:
  struct Entry {
    MorId g, h, result;
  };
  std::vector<std::string> objects_;
  std::vector<FinCategory::Morphism> morphisms_;
  std::vector<std::optional<MorId>> identities_;
  std::vector<Entry> entries_;
};

/// Exhaustive identity and associativity scan.
/// Throws StructuralError when a composable pair has no table entry and
/// LimitExceeded when the category exceeds `limits.max_morphisms`.
ValidationReport check_category(const FinCategory& c, const Limits& limits = {});

/// compose(g, h) = "g then h". Throws NotComposableError if cod(g) != dom(h)
/// and StructuralError if the table has a gap there.
MorId compose(const FinCategory& c, MorId g, MorId h);

/// Returns the inverse of `m` when one exists (first in declaration order).
std::optional<MorId> is_isomorphism(const FinCategory& c, MorId m);

/// One-object category of the invertible endomorphisms of `a`, with
/// composition restricted from `c`.
FinCategory automorphism_group(const FinCategory& c, ObjId a);

bool is_monoid(const FinCategory& c);
bool is_group(const FinCategory& c);

struct Pullback {
  ObjId apex;
  MorId p1;
  MorId p2;
  bool operator==(const Pullback&) const = default;
};

/// Searches objects and projection pairs in canonical order for a cone over
/// the cospan (f, g) that satisfies the universal property. Throws
/// NotComposableError when cod(f) != cod(g).
std::optional<Pullback> find_pullback(const FinCategory& c, MorId f, MorId g);

/// Looks up names, throwing StructuralError for unknown ones.
ObjId object_named(const FinCategory& c, std::string_view name);
MorId morphism_named(const FinCategory& c, std::string_view name);

}  // namespace catmodel

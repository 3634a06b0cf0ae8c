#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "catmodel/category.hpp"
#include "catmodel/report.hpp"

namespace catmodel {

/// A candidate functor between finite categories. Maps are indexed by the
/// source's ObjId / MorId; check_functor decides whether it is a functor.
struct CatFunctor {
  FinCategory source;
  FinCategory target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId operator()(ObjId a) const { return obj_map.at(a.index); }
  MorId operator()(MorId m) const { return mor_map.at(m.index); }
};

/// Checks the functor laws: endpoints respected, identities preserved,
/// composites preserved. Throws StructuralError if a map is incomplete or
/// points outside the target.
ValidationReport check_functor(const CatFunctor& f);

CatFunctor identity_functor(const FinCategory& c);
/// Sends every object to `a` and every morphism to id_a.
CatFunctor constant_functor(const FinCategory& source, const FinCategory& target, ObjId a);

/// Number of candidate assignments the functor search would visit, after
/// forcing identities and restricting each morphism to the right hom-set.
std::uint64_t functor_search_bound(const FinCategory& source, const FinCategory& target);

/// All functors source -> target in canonical order (object images, then
/// morphism images, lexicographic over declaration order). Throws
/// LimitExceeded carrying functor_search_bound when it exceeds `limit`.
std::vector<CatFunctor> enumerate_functors(const FinCategory& source, const FinCategory& target,
                                           std::uint64_t limit = 10'000'000);

/// A functor from a finite category into finite sets. Elements are opaque
/// tokens; `at_mor[m][i]` is the index in F(cod m) of the image of element i
/// of F(dom m).
struct SetFunctor {
  FinCategory source;
  std::vector<std::vector<std::string>> at_obj;
  std::vector<std::vector<std::size_t>> at_mor;

  const std::vector<std::string>& operator()(ObjId a) const { return at_obj.at(a.index); }
  const std::vector<std::size_t>& operator()(MorId m) const { return at_mor.at(m.index); }
};

/// F(id) is the identity function and F(g then h) = F(h) after F(g).
ValidationReport check_set_functor(const SetFunctor& f);

/// hom(c, -): d maps to the morphisms c -> d, g acts by post-composition.
SetFunctor hom_functor(const FinCategory& c, ObjId obj);

struct NatTransf {
  std::vector<std::vector<std::size_t>> components;  // components[a][x] in G(a)

  bool operator==(const NatTransf&) const = default;
};

ValidationReport check_naturality(const SetFunctor& from, const SetFunctor& to,
                                  const NatTransf& alpha);

/// All natural transformations from -> to in canonical order. `node_limit`
/// caps the number of partial assignments visited; LimitExceeded otherwise.
std::vector<NatTransf> enumerate_nat_transfs(const SetFunctor& from, const SetFunctor& to,
                                             std::uint64_t node_limit = 10'000'000);

struct YonedaResult {
  ValidationReport report;
  std::size_t nat_count = 0;
  std::size_t element_count = 0;
  /// unit_images[k] = index in F(c) of alpha_k(id_c).
  std::vector<std::size_t> unit_images;
};

/// Enumerates Nat(hom(c,-), F) and verifies alpha -> alpha_c(id_c) is a
/// bijection onto F(c).
YonedaResult yoneda_check(const FinCategory& c, ObjId obj, const SetFunctor& f,
                          std::uint64_t node_limit = 10'000'000);

}  // namespace catmodel

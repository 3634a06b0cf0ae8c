#include "catmodel/functor.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "catmodel/error.hpp"

namespace catmodel {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Advances a mixed-radix counter; false once it wraps around.
bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

ValidationReport check_functor(const CatFunctor& f) {
  const auto& c = f.source;
  const auto& d = f.target;
  if (f.obj_map.size() != c.object_count() || f.mor_map.size() != c.morphism_count())
    throw StructuralError("functor maps do not cover the source category");
  for (auto a : f.obj_map)
    if (a.index >= d.object_count()) throw StructuralError("object image outside the target");
  for (auto m : f.mor_map)
    if (m.index >= d.morphism_count()) throw StructuralError("morphism image outside the target");

  ValidationReport report;
  for (auto g : c.morphisms()) {
    const auto fg = f(g);
    if (d.dom(fg) != f(c.dom(g)) || d.cod(fg) != f(c.cod(g)))
      report.add("endpoints", {c.name(g), d.name(fg)});
  }
  for (auto a : c.objects()) {
    auto id = c.identity(a);
    if (!id) continue;
    if (f(*id) != d.identity(f(a))) report.add("identity-preservation", {c.name(*id), d.name(f(*id))});
  }
  for (auto g : c.morphisms())
    for (auto h : c.morphisms()) {
      auto gh = c.composite(g, h);
      if (!gh) continue;
      const auto fg = f(g);
      const auto fh = f(h);
      if (d.cod(fg) != d.dom(fh)) {
        report.add("composition-preservation", {c.name(g), c.name(h)});
        continue;
      }
      auto image = d.composite(fg, fh);
      if (!image || *image != f(*gh)) report.add("composition-preservation", {c.name(g), c.name(h)});
    }
  return report;
}

CatFunctor identity_functor(const FinCategory& c) {
  return {c, c, c.objects(), c.morphisms()};
}

CatFunctor constant_functor(const FinCategory& source, const FinCategory& target, ObjId a) {
  auto id = target.identity(a);
  if (!id) throw StructuralError("object '" + target.name(a) + "' has no identity");
  return {source, target, std::vector<ObjId>(source.object_count(), a),
          std::vector<MorId>(source.morphism_count(), *id)};
}

// ---------------------------------------------------------------------------

namespace {

// Visits every map Ob(source) -> Ob(target) in lexicographic order.
template <typename Visit>
void for_each_object_map(const FinCategory& source, const FinCategory& target, Visit&& visit) {
  const auto nt = static_cast<std::uint32_t>(target.object_count());
  const auto ns = source.object_count();
  if (nt == 0 && ns > 0) return;
  std::vector<std::uint32_t> digits(ns, 0);
  do {
    std::vector<ObjId> map;
    map.reserve(ns);
    for (auto dgt : digits) map.push_back(ObjId{dgt});
    if (!visit(map)) return;
  } while (next_tuple(digits, nt));
}

// Product of candidate counts for the non-identity morphisms under `objs`.
std::uint64_t branch_count(const FinCategory& source, const FinCategory& target,
                           const std::vector<ObjId>& objs) {
  std::uint64_t product = 1;
  for (auto g : source.morphisms()) {
    if (source.is_identity(g)) continue;
    product = sat_mul(product, target.hom(objs[source.dom(g).index], objs[source.cod(g).index]).size());
  }
  return product;
}

}  // namespace

std::uint64_t functor_search_bound(const FinCategory& source, const FinCategory& target) {
  std::uint64_t bound = 0;
  for_each_object_map(source, target, [&](const std::vector<ObjId>& objs) {
    bound = sat_add(bound, sat_add(1, branch_count(source, target, objs)));
    return bound != kSaturated;
  });
  return bound;
}

std::vector<CatFunctor> enumerate_functors(const FinCategory& source, const FinCategory& target,
                                           std::uint64_t limit) {
  const auto bound = functor_search_bound(source, target);
  if (bound > limit) throw LimitExceeded("enumerate_functors", bound, limit);
  if (!source.composition_gaps().empty() || !target.composition_gaps().empty())
    throw StructuralError("enumerate_functors needs complete composition tables");

  const auto nmor = source.morphism_count();
  // checks_at[i]: composable (g, h, g;h) whose largest index is i, so they can
  // be verified as soon as morphism i has an image.
  struct Check {
    MorId g, h, gh;
  };
  std::vector<std::vector<Check>> checks_at(nmor);
  for (auto g : source.morphisms())
    for (auto h : source.morphisms()) {
      auto gh = source.composite(g, h);
      if (!gh) continue;
      const auto top = std::max({g.index, h.index, gh->index});
      checks_at[top].push_back({g, h, *gh});
    }

  std::vector<CatFunctor> out;
  for_each_object_map(source, target, [&](const std::vector<ObjId>& objs) {
    std::vector<MorId> mors(nmor);

    // Candidate images for each morphism under this object map.
    std::vector<std::vector<MorId>> candidates(nmor);
    for (auto g : source.morphisms()) {
      const auto a = objs[source.dom(g).index];
      if (source.is_identity(g)) {
        if (auto id = target.identity(a)) candidates[g.index] = {*id};
      } else {
        candidates[g.index] = target.hom(a, objs[source.cod(g).index]);
      }
    }

    auto consistent = [&](std::size_t i) {
      for (const auto& ck : checks_at[i]) {
        if (target.composite(mors[ck.g.index], mors[ck.h.index]) != mors[ck.gh.index]) return false;
      }
      return true;
    };

    auto search = [&](auto&& self, std::size_t i) -> void {
      if (i == nmor) {
        out.push_back({source, target, objs, mors});
        return;
      }
      for (auto cand : candidates[i]) {
        mors[i] = cand;
        if (consistent(i)) self(self, i + 1);
      }
    };
    search(search, 0);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

ValidationReport check_set_functor(const SetFunctor& f) {
  const auto& c = f.source;
  if (f.at_obj.size() != c.object_count() || f.at_mor.size() != c.morphism_count())
    throw StructuralError("set functor does not cover its source category");
  for (auto m : c.morphisms()) {
    const auto& fn = f(m);
    if (fn.size() != f(c.dom(m)).size())
      throw StructuralError("function for '" + c.name(m) + "' has the wrong domain size");
    for (auto y : fn)
      if (y >= f(c.cod(m)).size())
        throw StructuralError("function for '" + c.name(m) + "' leaves its codomain");
  }

  ValidationReport report;
  for (auto a : c.objects()) {
    auto id = c.identity(a);
    if (!id) continue;
    const auto& fn = f(*id);
    for (std::size_t x = 0; x < fn.size(); ++x)
      if (fn[x] != x) report.add("identity-preservation", {c.name(*id), f(a)[x]});
  }
  for (auto g : c.morphisms())
    for (auto h : c.morphisms()) {
      auto gh = c.composite(g, h);
      if (!gh) continue;
      const auto& fg = f(g);
      const auto& fh = f(h);
      const auto& fgh = f(*gh);
      for (std::size_t x = 0; x < fg.size(); ++x)
        if (fh[fg[x]] != fgh[x])
          report.add("composition-preservation", {c.name(g), c.name(h), f(c.dom(g))[x]});
    }
  return report;
}

SetFunctor hom_functor(const FinCategory& c, ObjId obj) {
  SetFunctor f{c, {}, {}};
  for (auto d : c.objects()) {
    std::vector<std::string> names;
    for (auto m : c.hom(obj, d)) names.push_back(c.name(m));
    f.at_obj.push_back(std::move(names));
  }
  for (auto g : c.morphisms()) {
    const auto& from = c.hom(obj, c.dom(g));
    const auto& to = c.hom(obj, c.cod(g));
    std::vector<std::size_t> fn;
    for (auto h : from) {
      const auto hg = compose(c, h, g);
      fn.push_back(static_cast<std::size_t>(std::find(to.begin(), to.end(), hg) - to.begin()));
    }
    f.at_mor.push_back(std::move(fn));
  }
  return f;
}

ValidationReport check_naturality(const SetFunctor& from, const SetFunctor& to,
                                  const NatTransf& alpha) {
  const auto& c = from.source;
  if (!(c == to.source)) throw StructuralError("set functors have different source categories");
  if (alpha.components.size() != c.object_count())
    throw StructuralError("natural transformation has the wrong number of components");
  for (auto a : c.objects()) {
    const auto& comp = alpha.components[a.index];
    if (comp.size() != from(a).size()) throw StructuralError("component has the wrong domain size");
    for (auto y : comp)
      if (y >= to(a).size()) throw StructuralError("component leaves its codomain");
  }

  ValidationReport report;
  for (auto g : c.morphisms()) {
    const auto a = c.dom(g);
    const auto b = c.cod(g);
    for (std::size_t x = 0; x < from(a).size(); ++x) {
      if (to(g)[alpha.components[a.index][x]] != alpha.components[b.index][from(g)[x]])
        report.add("naturality", {c.name(g), from(a)[x]});
    }
  }
  return report;
}

std::vector<NatTransf> enumerate_nat_transfs(const SetFunctor& from, const SetFunctor& to,
                                             std::uint64_t node_limit) {
  const auto& c = from.source;
  if (!(c == to.source)) throw StructuralError("set functors have different source categories");

  // One variable per (object, element of F(object)), in canonical order.
  struct Var {
    ObjId obj;
    std::size_t elem;
  };
  std::vector<Var> vars;
  std::vector<std::size_t> first_var(c.object_count());
  for (auto a : c.objects()) {
    first_var[a.index] = vars.size();
    for (std::size_t x = 0; x < from(a).size(); ++x) vars.push_back({a, x});
  }

  // Naturality at (g, x): G(g)(alpha_a(x)) == alpha_b(F(g)(x)). Each square
  // is checked once both of its variables are assigned.
  struct Square {
    MorId g;
    std::size_t lhs_var;
    std::size_t rhs_var;
  };
  std::vector<std::vector<Square>> squares_at(vars.size());
  for (auto g : c.morphisms()) {
    const auto a = c.dom(g);
    const auto b = c.cod(g);
    for (std::size_t x = 0; x < from(a).size(); ++x) {
      const auto u = first_var[a.index] + x;
      const auto v = first_var[b.index] + from(g)[x];
      squares_at[std::max(u, v)].push_back({g, u, v});
    }
  }

  std::vector<std::size_t> value(vars.size());
  std::vector<NatTransf> out;
  std::uint64_t nodes = 0;

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == vars.size()) {
      NatTransf alpha;
      for (auto a : c.objects()) {
        auto begin = value.begin() + static_cast<std::ptrdiff_t>(first_var[a.index]);
        alpha.components.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(from(a).size()));
      }
      out.push_back(std::move(alpha));
      return;
    }
    const auto range = to(vars[i].obj).size();
    for (std::size_t y = 0; y < range; ++y) {
      if (++nodes > node_limit) throw LimitExceeded("enumerate_nat_transfs", nodes, node_limit);
      value[i] = y;
      bool ok = true;
      for (const auto& sq : squares_at[i]) {
        if (to(sq.g)[value[sq.lhs_var]] != value[sq.rhs_var]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  search(search, 0);
  return out;
}

YonedaResult yoneda_check(const FinCategory& c, ObjId obj, const SetFunctor& f,
                          std::uint64_t node_limit) {
  const auto hom = hom_functor(c, obj);
  const auto nats = enumerate_nat_transfs(hom, f, node_limit);

  YonedaResult result;
  result.nat_count = nats.size();
  result.element_count = f(obj).size();

  const auto id = c.identity(obj);
  if (!id) {
    result.report.add("identity", {c.name(obj)});
    return result;
  }
  const auto& endos = c.hom(obj, obj);
  const auto unit = static_cast<std::size_t>(std::find(endos.begin(), endos.end(), *id) - endos.begin());

  std::vector<std::size_t> hits(result.element_count, 0);
  for (const auto& alpha : nats) {
    const auto image = alpha.components[obj.index][unit];
    result.unit_images.push_back(image);
    ++hits[image];
  }
  for (std::size_t x = 0; x < hits.size(); ++x) {
    if (hits[x] > 1) result.report.add("yoneda-injective", {f(obj)[x]});
    if (hits[x] == 0) result.report.add("yoneda-surjective", {f(obj)[x]});
  }
  if (result.nat_count != result.element_count)
    result.report.add("yoneda-cardinality",
                      {std::to_string(result.nat_count), std::to_string(result.element_count)});
  return result;
}

}  // namespace catmodel

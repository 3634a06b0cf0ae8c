#include "catmodel/category.hpp"

#include <algorithm>
#include <set>

#include "catmodel/error.hpp"

namespace catmodel {

namespace {

std::string pair_text(const FinCategory& c, MorId g, MorId h) {
  return "(" + c.name(g) + ", " + c.name(h) + ")";
}

}  // namespace

bool FinCategory::is_identity(MorId m) const {
  auto id = identities_.at(dom(m).index);
  return id && *id == m;
}

std::optional<MorId> FinCategory::composite(MorId g, MorId h) const {
  return table_.at(g.index * morphisms_.size() + h.index);
}

std::optional<ObjId> FinCategory::find_object(std::string_view name) const {
  for (std::uint32_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return ObjId{i};
  return std::nullopt;
}

std::optional<MorId> FinCategory::find_morphism(std::string_view name) const {
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return MorId{i};
  return std::nullopt;
}

std::vector<ObjId> FinCategory::objects() const {
  std::vector<ObjId> out;
  for (std::uint32_t i = 0; i < objects_.size(); ++i) out.push_back(ObjId{i});
  return out;
}

std::vector<MorId> FinCategory::morphisms() const {
  std::vector<MorId> out;
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) out.push_back(MorId{i});
  return out;
}

std::vector<std::pair<MorId, MorId>> FinCategory::composition_gaps() const {
  std::vector<std::pair<MorId, MorId>> gaps;
  for (auto g : morphisms())
    for (auto h : morphisms())
      if (cod(g) == dom(h) && !composite(g, h)) gaps.emplace_back(g, h);
  return gaps;
}

// ---------------------------------------------------------------------------

ObjId CategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.emplace_back();
  return ObjId{static_cast<std::uint32_t>(objects_.size() - 1)};
}

MorId CategoryBuilder::add_morphism(std::string name, ObjId dom, ObjId cod) {
  morphisms_.push_back({std::move(name), dom, cod});
  return MorId{static_cast<std::uint32_t>(morphisms_.size() - 1)};
}

void CategoryBuilder::set_identity(ObjId a, MorId id) {
  if (a.index >= identities_.size()) throw StructuralError("identity for unknown object");
  identities_[a.index] = id;
}

void CategoryBuilder::set_composite(MorId g, MorId h, MorId result) {
  entries_.push_back({g, h, result});
}

std::optional<ObjId> CategoryBuilder::find_object(std::string_view name) const {
  for (std::uint32_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return ObjId{i};
  return std::nullopt;
}

std::optional<MorId> CategoryBuilder::find_morphism(std::string_view name) const {
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return MorId{i};
  return std::nullopt;
}

bool CategoryBuilder::has_composite(MorId g, MorId h) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.g == g && e.h == h; });
}

MorId CategoryBuilder::add_identity(ObjId a) {
  const auto id = add_morphism("id_" + objects_.at(a.index), a, a);
  identities_[a.index] = id;
  return id;
}

void CategoryBuilder::complete_unit_composites() {
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) {
    const MorId m{i};
    const auto left = identities_[morphisms_[i].dom.index];
    const auto right = identities_[morphisms_[i].cod.index];
    if (left && !has_composite(*left, m)) set_composite(*left, m, m);
    if (right && !has_composite(m, *right)) set_composite(m, *right, m);
  }
}

FinCategory CategoryBuilder::build() const {
  FinCategory c;
  const auto nobj = objects_.size();
  const auto nmor = morphisms_.size();

  std::set<std::string_view> seen;
  for (const auto& o : objects_) {
    if (o.empty()) throw StructuralError("empty object name");
    if (!seen.insert(o).second) throw StructuralError("duplicate name '" + o + "'");
  }
  for (const auto& m : morphisms_) {
    if (m.name.empty()) throw StructuralError("empty morphism name");
    if (!seen.insert(m.name).second) throw StructuralError("duplicate name '" + m.name + "'");
    if (m.dom.index >= nobj || m.cod.index >= nobj)
      throw StructuralError("morphism '" + m.name + "' has an unresolved endpoint");
  }
  for (std::size_t a = 0; a < nobj; ++a) {
    if (!identities_[a]) continue;
    const auto id = *identities_[a];
    if (id.index >= nmor) throw StructuralError("identity of '" + objects_[a] + "' is unresolved");
    const auto& m = morphisms_[id.index];
    if (m.dom.index != a || m.cod.index != a)
      throw StructuralError("identity '" + m.name + "' is not an endomorphism of '" +
                            objects_[a] + "'");
  }

  c.objects_ = objects_;
  c.morphisms_ = morphisms_;
  c.identities_ = identities_;
  c.table_.assign(nmor * nmor, std::nullopt);
  for (const auto& e : entries_) {
    if (e.g.index >= nmor || e.h.index >= nmor || e.result.index >= nmor)
      throw StructuralError("composition entry refers to an unknown morphism");
    const auto& g = morphisms_[e.g.index];
    const auto& h = morphisms_[e.h.index];
    const auto& r = morphisms_[e.result.index];
    if (g.cod != h.dom)
      throw StructuralError("composition entry for non-composable pair (" + g.name + ", " +
                            h.name + ")");
    if (r.dom != g.dom || r.cod != h.cod)
      throw StructuralError("composite of (" + g.name + ", " + h.name + ") has wrong type");
    auto& slot = c.table_[e.g.index * nmor + e.h.index];
    if (slot && *slot != e.result)
      throw StructuralError("conflicting composites for (" + g.name + ", " + h.name + ")");
    slot = e.result;
  }

  c.hom_.assign(nobj * nobj, {});
  for (std::uint32_t i = 0; i < nmor; ++i)
    c.hom_[morphisms_[i].dom.index * nobj + morphisms_[i].cod.index].push_back(MorId{i});
  return c;
}

// ---------------------------------------------------------------------------

ValidationReport check_category(const FinCategory& c, const Limits& limits) {
  if (c.morphism_count() > limits.max_morphisms)
    throw LimitExceeded("check_category", c.morphism_count(), limits.max_morphisms);

  auto gaps = c.composition_gaps();
  if (!gaps.empty()) {
    std::string msg = "missing composites:";
    for (auto [g, h] : gaps) msg += " " + pair_text(c, g, h);
    throw StructuralError(msg);
  }

  ValidationReport report;
  for (auto a : c.objects()) {
    auto id = c.identity(a);
    if (!id) {
      report.add("identity", {c.name(a)});
      continue;
    }
    for (auto g : c.morphisms()) {
      if (c.dom(g) == a && *c.composite(*id, g) != g)
        report.add("identity", {c.name(*id), c.name(g)});
      if (c.cod(g) == a && *c.composite(g, *id) != g)
        report.add("identity", {c.name(g), c.name(*id)});
    }
  }
  for (auto g : c.morphisms())
    for (auto h : c.morphisms()) {
      if (c.cod(g) != c.dom(h)) continue;
      const auto gh = *c.composite(g, h);
      for (auto k : c.morphisms()) {
        if (c.cod(h) != c.dom(k)) continue;
        if (*c.composite(gh, k) != *c.composite(g, *c.composite(h, k)))
          report.add("associativity", {c.name(g), c.name(h), c.name(k)});
      }
    }
  return report;
}

MorId compose(const FinCategory& c, MorId g, MorId h) {
  if (c.cod(g) != c.dom(h))
    throw NotComposableError("cannot compose " + pair_text(c, g, h) + ": cod(" + c.name(g) +
                             ") = " + c.name(c.cod(g)) + " but dom(" + c.name(h) +
                             ") = " + c.name(c.dom(h)));
  auto r = c.composite(g, h);
  if (!r) throw StructuralError("composition table has no entry for " + pair_text(c, g, h));
  return *r;
}

std::optional<MorId> is_isomorphism(const FinCategory& c, MorId m) {
  const auto a = c.dom(m);
  const auto b = c.cod(m);
  const auto ida = c.identity(a);
  const auto idb = c.identity(b);
  if (!ida || !idb) return std::nullopt;
  for (auto n : c.hom(b, a)) {
    if (c.composite(m, n) == ida && c.composite(n, m) == idb) return n;
  }
  return std::nullopt;
}

FinCategory automorphism_group(const FinCategory& c, ObjId a) {
  CategoryBuilder b;
  const auto star = b.add_object(c.name(a));
  std::vector<MorId> kept;
  std::vector<std::optional<MorId>> remap(c.morphism_count());
  for (auto m : c.hom(a, a)) {
    if (!is_isomorphism(c, m)) continue;
    remap[m.index] = b.add_morphism(c.name(m), star, star);
    kept.push_back(m);
  }
  if (auto id = c.identity(a); id && remap[id->index]) b.set_identity(star, *remap[id->index]);
  for (auto g : kept)
    for (auto h : kept) {
      auto r = c.composite(g, h);
      if (r && remap[r->index]) b.set_composite(*remap[g.index], *remap[h.index], *remap[r->index]);
    }
  return b.build();
}

bool is_monoid(const FinCategory& c) { return c.object_count() == 1; }

bool is_group(const FinCategory& c) {
  if (!is_monoid(c)) return false;
  for (auto m : c.morphisms())
    if (!is_isomorphism(c, m)) return false;
  return true;
}

std::optional<Pullback> find_pullback(const FinCategory& c, MorId f, MorId g) {
  if (c.cod(f) != c.cod(g))
    throw NotComposableError("not a cospan: " + pair_text(c, f, g));
  const auto x = c.dom(f);
  const auto y = c.dom(g);

  // All commuting cones (apex, q1, q2) over the cospan, in canonical order.
  std::vector<Pullback> cones;
  for (auto q : c.objects())
    for (auto q1 : c.hom(q, x))
      for (auto q2 : c.hom(q, y))
        if (compose(c, q1, f) == compose(c, q2, g)) cones.push_back({q, q1, q2});

  for (const auto& cand : cones) {
    bool universal = true;
    for (const auto& cone : cones) {
      int factorizations = 0;
      for (auto u : c.hom(cone.apex, cand.apex)) {
        if (compose(c, u, cand.p1) == cone.p1 && compose(c, u, cand.p2) == cone.p2)
          ++factorizations;
      }
      if (factorizations != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return cand;
  }
  return std::nullopt;
}

ObjId object_named(const FinCategory& c, std::string_view name) {
  auto a = c.find_object(name);
  if (!a) throw StructuralError("unknown object '" + std::string(name) + "'");
  return *a;
}

MorId morphism_named(const FinCategory& c, std::string_view name) {
  auto m = c.find_morphism(name);
  if (!m) throw StructuralError("unknown morphism '" + std::string(name) + "'");
  return *m;
}

}  // namespace catmodel

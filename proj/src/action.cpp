#include "catmodel/action.hpp"

#include <algorithm>
#include <array>

#include "catmodel/error.hpp"

namespace catmodel {

std::size_t FinMonoid::index_of(std::string_view name) const {
  auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) throw StructuralError("unknown element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - elements.begin());
}

ValidationReport check_monoid(const FinMonoid& m) {
  const auto n = m.size();
  if (m.table.size() != n * n) throw StructuralError("Cayley table has the wrong size");
  if (n == 0 || m.unit >= n) throw StructuralError("monoid has no unit");
  for (auto v : m.table)
    if (v >= n) throw StructuralError("Cayley table entry out of range");

  ValidationReport report;
  for (std::size_t e = 0; e < n; ++e) {
    if (m(m.unit, e) != e) report.add("identity", {m.elements[m.unit], m.elements[e]});
    if (m(e, m.unit) != e) report.add("identity", {m.elements[e], m.elements[m.unit]});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          report.add("associativity", {m.elements[a], m.elements[b], m.elements[c]});
  return report;
}

FinCategory monoid_to_category(const FinMonoid& m, const std::string& object_name) {
  auto report = check_monoid(m);
  if (!report.ok()) {
    std::string msg = "not a monoid:";
    for (const auto& v : report.violations) {
      msg += " " + v.law + "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i) msg += (i ? "," : "") + v.witness[i];
      msg += ")";
    }
    throw StructuralError(msg);
  }
  CategoryBuilder b;
  const auto star = b.add_object(object_name);
  std::vector<MorId> mors;
  for (const auto& e : m.elements) mors.push_back(b.add_morphism(e, star, star));
  b.set_identity(star, mors[m.unit]);
  for (std::size_t e = 0; e < m.size(); ++e)
    for (std::size_t f = 0; f < m.size(); ++f) b.set_composite(mors[e], mors[f], mors[m(e, f)]);
  return b.build();
}

std::size_t SetAction::point_index(std::string_view name) const {
  auto it = std::find(carrier.begin(), carrier.end(), name);
  if (it == carrier.end()) throw UnknownPointError("unknown point '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - carrier.begin());
}

ValidationReport check_action(const SetAction& a) {
  const auto& m = a.monoid;
  const auto n = a.carrier.size();
  if (a.act.size() != m.size()) throw StructuralError("action does not cover every element");
  for (const auto& fn : a.act) {
    if (fn.size() != n) throw StructuralError("action function has the wrong domain size");
    for (auto y : fn)
      if (y >= n) throw StructuralError("action function leaves the carrier");
  }

  ValidationReport report;
  for (std::size_t p = 0; p < n; ++p)
    if (a.act[m.unit][p] != p) report.add("identity", {m.elements[m.unit], a.carrier[p]});
  for (std::size_t e = 0; e < m.size(); ++e)
    for (std::size_t f = 0; f < m.size(); ++f) {
      const auto& ef = a.act[m(e, f)];
      for (std::size_t p = 0; p < n; ++p)
        if (a.act[f][a.act[e][p]] != ef[p])
          report.add("composition", {m.elements[e], m.elements[f], a.carrier[p]});
    }
  return report;
}

ValidationReport check_representation(const MatRepresentation& r) {
  const auto& m = r.monoid;
  if (r.rep.size() != m.size()) throw StructuralError("representation does not cover every element");
  for (const auto& x : r.rep)
    if (x.rows() != r.dim || x.cols() != r.dim)
      throw DimensionError("representation matrix " + dims_text(x) + " is not " +
                           std::to_string(r.dim) + "x" + std::to_string(r.dim));

  ValidationReport report;
  if (r.rep[m.unit] != identity(r.dim)) report.add("identity", {m.elements[m.unit]});
  for (std::size_t e = 0; e < m.size(); ++e)
    for (std::size_t f = 0; f < m.size(); ++f)
      if (mat_mul(r.rep[e], r.rep[f]) != r.rep[m(e, f)])
        report.add("composition", {m.elements[e], m.elements[f]});
  return report;
}

std::vector<std::size_t> orbit(const SetAction& a, std::size_t point) {
  if (point >= a.carrier.size()) throw UnknownPointError("point index out of range");
  std::vector<bool> hit(a.carrier.size(), false);
  for (const auto& fn : a.act) hit[fn.at(point)] = true;
  hit[point] = true;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < hit.size(); ++p)
    if (hit[p]) out.push_back(p);
  return out;
}

PermutationMonoid monoid_from_functions(std::vector<std::string> names,
                                        std::vector<std::string> carrier,
                                        std::vector<std::vector<std::size_t>> functions) {
  const auto n = functions.size();
  if (names.size() != n) throw StructuralError("one name per function required");
  auto find = [&](const std::vector<std::size_t>& fn) -> std::size_t {
    auto it = std::find(functions.begin(), functions.end(), fn);
    if (it == functions.end()) throw StructuralError("functions are not closed under composition");
    return static_cast<std::size_t>(it - functions.begin());
  };

  std::vector<std::size_t> id(carrier.size());
  for (std::size_t p = 0; p < id.size(); ++p) id[p] = p;

  FinMonoid m{names, find(id), std::vector<std::size_t>(n * n)};
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<std::size_t> ef(carrier.size());
      for (std::size_t p = 0; p < ef.size(); ++p) ef[p] = functions[f][functions[e][p]];
      m.table[e * n + f] = find(ef);
    }
  SetAction action{m, std::move(carrier), std::move(functions)};
  return {m, std::move(action)};
}

// ---------------------------------------------------------------------------

D8 builtin_d8() {
  // Corner labels at positions (top-left, top-right, bottom-left,
  // bottom-right) after each symmetry, as drawn on the square. Home
  // positions hold A, B, C, D. A point moves to the home of the position it
  // is drawn at.
  struct Panel {
    const char* name;
    const char* labels;
  };
  constexpr std::array<Panel, 8> panels{{
      {"Id", "ABCD"},
      {"R90", "BDAC"},
      {"R180", "DCBA"},
      {"R270", "CADB"},
      {"FlipV", "CDAB"},
      {"R90F", "ACBD"},
      {"R180F", "BADC"},
      {"R270F", "DBCA"},
  }};

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> functions;
  for (const auto& panel : panels) {
    names.emplace_back(panel.name);
    std::vector<std::size_t> fn(4);
    for (std::size_t pos = 0; pos < 4; ++pos) fn[static_cast<std::size_t>(panel.labels[pos] - 'A')] = pos;
    functions.push_back(std::move(fn));
  }
  auto built = monoid_from_functions(std::move(names), {"A", "B", "C", "D"}, std::move(functions));
  return {std::move(built.monoid), std::move(built.action)};
}

RatMatrix windowpane_corner(std::size_t index) {
  static const std::array<std::array<int, 2>, 4> coords{{{0, 1}, {1, 1}, {0, 0}, {1, 0}}};
  const auto& c = coords.at(index);
  return RatMatrix{{c[0], c[1]}};
}

Windowpane builtin_windowpane() {
  enum : std::size_t { I, V, H, T };
  FinMonoid m{{"I", "V", "H", "T"}, I, {}};
  m.table = {
      I, V, H, T,  //
      V, V, T, T,  //
      H, T, H, T,  //
      T, T, T, T,  //
  };

  MatRepresentation rep{m, 2,
                        {RatMatrix{{1, 0}, {0, 1}}, RatMatrix{{1, 0}, {0, 0}},
                         RatMatrix{{0, 0}, {0, 1}}, RatMatrix{{0, 0}, {0, 0}}}};

  SetAction corners{m, {"A", "B", "C", "D"}, {}};
  for (std::size_t e = 0; e < m.size(); ++e) {
    std::vector<std::size_t> fn;
    for (std::size_t p = 0; p < 4; ++p) {
      const auto image = mat_mul(windowpane_corner(p), rep.rep[e]);
      std::size_t q = 0;
      while (q < 4 && windowpane_corner(q) != image) ++q;
      if (q == 4) throw StructuralError("windowpane matrix moves a corner off the pane");
      fn.push_back(q);
    }
    corners.act.push_back(std::move(fn));
  }
  return {std::move(m), std::move(corners), std::move(rep)};
}

}  // namespace catmodel

#include "catmodel/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace catmodel::dsl {

namespace {

enum class TokenKind { name, arrow, colon, equals };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t number;
};

bool is_break(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == ':' || ch == '=' || ch == '#';
}

std::vector<Token> lex(std::string_view text, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    const SourcePos pos{line_no, i + 1};
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
    } else if (text.substr(i, 2) == "->") {
      out.push_back({TokenKind::arrow, "->", pos});
      i += 2;
    } else if (ch == ':') {
      out.push_back({TokenKind::colon, ":", pos});
      ++i;
    } else if (ch == '=') {
      out.push_back({TokenKind::equals, "=", pos});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_break(text[j]) && text.substr(j, 2) != "->") ++j;
      out.push_back({TokenKind::name, std::string(text.substr(i, j - i)), pos});
      i = j;
    }
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = lex(text.substr(start, end - start), number);
    if (!tokens.empty()) lines.push_back({std::move(tokens), number});
    start = end + 1;
    ++number;
  }
  return lines;
}

// Token-stream helpers for one line.
class LineReader {
 public:
  explicit LineReader(const Line& line) : line_(line) {}

  bool done() const { return at_ >= line_.tokens.size(); }

  const Token& name(const char* what) {
    const auto& t = next(what);
    if (t.kind != TokenKind::name) throw ParseError(t.pos, std::string("expected ") + what + ", found '" + t.text + "'");
    return t;
  }

  void expect(TokenKind kind, const char* text) {
    const auto& t = next(text);
    if (t.kind != kind) throw ParseError(t.pos, std::string("expected '") + text + "', found '" + t.text + "'");
  }

  void end() {
    if (!done()) throw ParseError(line_.tokens[at_].pos, "unexpected '" + line_.tokens[at_].text + "'");
  }

  std::vector<Token> rest_names(const char* what) {
    std::vector<Token> out;
    while (!done()) out.push_back(name(what));
    return out;
  }

  bool peek_arrow_next() const {
    return at_ + 1 < line_.tokens.size() && line_.tokens[at_ + 1].kind == TokenKind::arrow;
  }

 private:
  const Token& next(const char* what) {
    if (done()) {
      const auto& last = line_.tokens.back();
      throw ParseError({line_.number, last.pos.column + last.text.size()},
                       std::string("expected ") + what + " at end of line");
    }
    return line_.tokens[at_++];
  }

  const Line& line_;
  std::size_t at_ = 0;
};

DocumentKind detect_kind(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError({1, 1}, "empty document");
  const auto& first = lines.front().tokens.front();
  static const std::map<std::string, DocumentKind> keywords{
      {"objects", DocumentKind::category}, {"mor", DocumentKind::category},
      {"cmp", DocumentKind::category},     {"elements", DocumentKind::monoid},
      {"unit", DocumentKind::monoid},      {"row", DocumentKind::monoid},
      {"use", DocumentKind::action},       {"carrier", DocumentKind::action},
      {"on", DocumentKind::action},
  };
  if (auto it = keywords.find(first.text); it != keywords.end()) return it->second;
  if (lines.front().tokens.size() > 1 && lines.front().tokens[1].kind == TokenKind::arrow)
    return DocumentKind::dynsys;
  throw ParseError(first.pos, "unknown directive '" + first.text + "'");
}

[[noreturn]] void wrong_directive(const Token& t, DocumentKind kind) {
  throw ParseError(t.pos, "unexpected '" + t.text + "' in a " + std::string(kind_name(kind)) + " document");
}

// Registers a name, rejecting duplicates within the given scope.
class NameScope {
 public:
  void declare(const std::string& name, SourcePos pos) {
    if (!names_.insert(name).second) throw ParseError(pos, "duplicate name '" + name + "'");
  }
  bool contains(const std::string& name) const { return names_.count(name) != 0; }

 private:
  std::set<std::string> names_;
};

// --- category ----------------------------------------------------------------

CategorySource parse_category(const std::vector<Line>& lines) {
  CategorySource src;
  for (const auto& line : lines) {
    LineReader r(line);
    const auto& kw = r.name("directive");
    if (kw.text == "objects") {
      for (const auto& t : r.rest_names("object name")) src.objects.push_back({t.text, t.pos});
      if (src.objects.empty()) throw ParseError(kw.pos, "objects needs at least one name");
    } else if (kw.text == "mor") {
      MorDecl d;
      const auto& n = r.name("morphism name");
      d.name = n.text;
      d.pos = n.pos;
      r.expect(TokenKind::colon, ":");
      d.dom = r.name("domain").text;
      r.expect(TokenKind::arrow, "->");
      d.cod = r.name("codomain").text;
      r.end();
      src.morphisms.push_back(std::move(d));
    } else if (kw.text == "cmp") {
      CmpDecl d;
      d.pos = kw.pos;
      d.first = r.name("morphism").text;
      d.second = r.name("morphism").text;
      r.expect(TokenKind::equals, "=");
      d.result = r.name("morphism").text;
      r.end();
      src.composites.push_back(std::move(d));
    } else {
      wrong_directive(kw, DocumentKind::category);
    }
  }
  return src;
}

// Positions of individual tokens in `mor` / `cmp` lines are recovered by
// re-lexing, so diagnostics point at the offending name.
SourcePos token_pos(const std::vector<Line>& lines, SourcePos line_pos, std::size_t index) {
  for (const auto& l : lines)
    if (l.number == line_pos.line) {
      // Skip over the leading directive when the declaration starts after it.
      std::size_t start = 0;
      while (start < l.tokens.size() && l.tokens[start].pos.column < line_pos.column) ++start;
      std::size_t seen = 0;
      for (std::size_t k = start; k < l.tokens.size(); ++k) {
        if (l.tokens[k].kind != TokenKind::name) continue;
        if (seen++ == index) return l.tokens[k].pos;
      }
    }
  return line_pos;
}

struct ResolvedMor {
  std::string dom;
  std::string cod;
};

void validate_category(const CategorySource& src, const std::vector<Line>& lines) {
  NameScope scope;
  std::set<std::string> objects;
  for (const auto& o : src.objects) {
    scope.declare(o.name, o.pos);
    objects.insert(o.name);
  }
  std::map<std::string, ResolvedMor> mors;
  for (const auto& o : src.objects) {
    const auto id = "id_" + o.name;
    if (scope.contains(id)) throw ParseError(o.pos, "identity name '" + id + "' is already taken");
    mors[id] = {o.name, o.name};
  }
  for (const auto& m : src.morphisms) {
    if (mors.count(m.name)) throw ParseError(m.pos, "duplicate name '" + m.name + "'");
    scope.declare(m.name, m.pos);
    if (!objects.count(m.dom)) throw ParseError(token_pos(lines, m.pos, 1), "undeclared object '" + m.dom + "'");
    if (!objects.count(m.cod)) throw ParseError(token_pos(lines, m.pos, 2), "undeclared object '" + m.cod + "'");
    mors[m.name] = {m.dom, m.cod};
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& c : src.composites) {
    const std::string* names[] = {&c.first, &c.second, &c.result};
    for (std::size_t k = 0; k < 3; ++k)
      if (!mors.count(*names[k]))
        throw ParseError(token_pos(lines, c.pos, k + 1), "undeclared morphism '" + *names[k] + "'");
    const auto& g = mors[c.first];
    const auto& h = mors[c.second];
    const auto& r = mors[c.result];
    if (g.cod != h.dom)
      throw ParseError(c.pos, "'" + c.first + "' and '" + c.second + "' are not composable");
    if (r.dom != g.dom || r.cod != h.cod)
      throw ParseError(token_pos(lines, c.pos, 3),
                       "'" + c.result + "' is not a morphism " + g.dom + " -> " + h.cod);
    if (!pairs.insert({c.first, c.second}).second)
      throw ParseError(c.pos, "duplicate composite for '" + c.first + "' '" + c.second + "'");
  }
}

// --- monoid --------------------------------------------------------------------

MonoidSource parse_monoid(const std::vector<Line>& lines) {
  MonoidSource src;
  bool have_unit = false;
  bool have_elements = false;
  for (const auto& line : lines) {
    LineReader r(line);
    const auto& kw = r.name("directive");
    if (kw.text == "elements") {
      if (have_elements) throw ParseError(kw.pos, "duplicate elements declaration");
      have_elements = true;
      for (const auto& t : r.rest_names("element name")) src.elements.push_back({t.text, t.pos});
      if (src.elements.empty()) throw ParseError(kw.pos, "elements needs at least one name");
    } else if (kw.text == "unit") {
      if (have_unit) throw ParseError(kw.pos, "duplicate unit declaration");
      have_unit = true;
      const auto& t = r.name("unit element");
      src.unit = {t.text, t.pos};
      r.end();
    } else if (kw.text == "row") {
      RowDecl row;
      const auto& t = r.name("element");
      row.element = t.text;
      row.pos = t.pos;
      r.expect(TokenKind::colon, ":");
      for (const auto& p : r.rest_names("product")) row.products.push_back(p.text);
      src.rows.push_back(std::move(row));
    } else {
      wrong_directive(kw, DocumentKind::monoid);
    }
  }
  return src;
}

void validate_monoid(const MonoidSource& src, const std::vector<Line>& lines) {
  const SourcePos top = lines.front().tokens.front().pos;
  if (src.elements.empty()) throw ParseError(top, "missing elements declaration");
  NameScope scope;
  for (const auto& e : src.elements) scope.declare(e.name, e.pos);
  const SourcePos elements_pos = src.elements.front().pos;
  if (src.unit.name.empty()) throw ParseError(elements_pos, "missing unit declaration");
  if (!scope.contains(src.unit.name))
    throw ParseError(src.unit.pos, "undeclared element '" + src.unit.name + "'");

  std::set<std::string> rows;
  for (const auto& row : src.rows) {
    if (!scope.contains(row.element))
      throw ParseError(row.pos, "undeclared element '" + row.element + "'");
    if (!rows.insert(row.element).second)
      throw ParseError(row.pos, "duplicate row for '" + row.element + "'");
    if (row.products.size() != src.elements.size())
      throw ParseError(row.pos, "row for '" + row.element + "' has " + std::to_string(row.products.size()) +
                                    " entries, expected " + std::to_string(src.elements.size()));
    for (std::size_t k = 0; k < row.products.size(); ++k)
      if (!scope.contains(row.products[k]))
        throw ParseError(token_pos(lines, row.pos, k + 1), "undeclared element '" + row.products[k] + "'");
  }
  for (const auto& e : src.elements)
    if (!rows.count(e.name)) throw ParseError(e.pos, "no row for element '" + e.name + "'");
}

// --- action --------------------------------------------------------------------

ActionSource parse_action(const std::vector<Line>& lines) {
  ActionSource src;
  bool have_use = false;
  for (const auto& line : lines) {
    LineReader r(line);
    const auto& kw = r.name("directive");
    if (kw.text == "use") {
      if (have_use) throw ParseError(kw.pos, "duplicate use declaration");
      have_use = true;
      const auto& t = r.name("monoid file");
      src.use = {t.text, t.pos};
      r.end();
    } else if (kw.text == "carrier") {
      for (const auto& t : r.rest_names("point name")) src.carrier.push_back({t.text, t.pos});
      if (src.carrier.empty()) throw ParseError(kw.pos, "carrier needs at least one point");
    } else if (kw.text == "on") {
      OnDecl on;
      const auto& t = r.name("element");
      on.element = t.text;
      on.pos = t.pos;
      r.expect(TokenKind::colon, ":");
      while (!r.done()) {
        Mapping m;
        m.from = r.name("point").text;
        r.expect(TokenKind::arrow, "->");
        m.to = r.name("image point").text;
        on.maps.push_back(std::move(m));
      }
      src.actions.push_back(std::move(on));
    } else {
      wrong_directive(kw, DocumentKind::action);
    }
  }
  return src;
}

void validate_action(const ActionSource& src, const std::vector<Line>& lines) {
  const SourcePos top = lines.front().tokens.front().pos;
  if (src.use.name.empty()) throw ParseError(top, "missing use declaration");
  if (src.carrier.empty()) throw ParseError(top, "missing carrier declaration");
  NameScope points;
  for (const auto& p : src.carrier) points.declare(p.name, p.pos);
  std::set<std::string> elements;
  for (const auto& e : src.monoid.elements) elements.insert(e.name);

  std::set<std::string> seen;
  for (const auto& on : src.actions) {
    if (!elements.count(on.element))
      throw ParseError(on.pos, "undeclared element '" + on.element + "'");
    if (!seen.insert(on.element).second)
      throw ParseError(on.pos, "duplicate action for '" + on.element + "'");
    std::set<std::string> mapped;
    for (std::size_t k = 0; k < on.maps.size(); ++k) {
      const auto& m = on.maps[k];
      const auto from_pos = token_pos(lines, on.pos, 1 + 2 * k);
      if (!points.contains(m.from)) throw ParseError(from_pos, "undeclared point '" + m.from + "'");
      if (!points.contains(m.to))
        throw ParseError(token_pos(lines, on.pos, 2 + 2 * k), "undeclared point '" + m.to + "'");
      if (!mapped.insert(m.from).second) throw ParseError(from_pos, "point '" + m.from + "' mapped twice");
    }
    for (const auto& p : src.carrier)
      if (!mapped.count(p.name))
        throw ParseError(on.pos, "'" + on.element + "' does not map point '" + p.name + "'");
  }
  for (const auto& e : src.monoid.elements)
    if (!seen.count(e.name))
      throw ParseError(src.carrier.front().pos, "no action given for element '" + e.name + "'");
}

// --- dynsys ----------------------------------------------------------------------

DynSysSource parse_dynsys(const std::vector<Line>& lines) {
  DynSysSource src;
  for (const auto& line : lines) {
    LineReader r(line);
    StepDecl d;
    const auto& from = r.name("point");
    d.from = from.text;
    d.pos = from.pos;
    r.expect(TokenKind::arrow, "->");
    d.to = r.name("image point").text;
    r.end();
    src.steps.push_back(std::move(d));
  }
  return src;
}

void validate_dynsys(const DynSysSource& src, const std::vector<Line>& lines) {
  NameScope scope;
  for (const auto& s : src.steps) scope.declare(s.from, s.pos);
  for (const auto& s : src.steps)
    if (!scope.contains(s.to))
      throw ParseError(token_pos(lines, s.pos, 1), "point '" + s.to + "' has no image");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::category: return "category";
    case DocumentKind::monoid: return "monoid";
    case DocumentKind::action: return "action";
    case DocumentKind::dynsys: return "dynsys";
  }
  return "unknown";
}

Document parse(std::string_view text, const Resolver& resolver) {
  const auto lines = split_lines(text);
  switch (detect_kind(lines)) {
    case DocumentKind::category: {
      auto src = parse_category(lines);
      validate_category(src, lines);
      return {std::move(src)};
    }
    case DocumentKind::monoid: {
      auto src = parse_monoid(lines);
      validate_monoid(src, lines);
      return {std::move(src)};
    }
    case DocumentKind::action: {
      auto src = parse_action(lines);
      if (src.use.name.empty()) throw ParseError(lines.front().tokens.front().pos, "missing use declaration");
      if (!resolver) throw ParseError(src.use.pos, "cannot resolve '" + src.use.name + "'");
      Document used;
      try {
        used = parse(resolver(src.use.name));
      } catch (const ParseError& e) {
        throw ParseError(src.use.pos, "in '" + src.use.name + "': " + e.what());
      } catch (const Error& e) {
        throw ParseError(src.use.pos, e.what());
      }
      if (used.kind() != DocumentKind::monoid)
        throw ParseError(src.use.pos, "'" + src.use.name + "' is not a monoid document");
      src.monoid = std::get<MonoidSource>(std::move(used.body));
      validate_action(src, lines);
      return {std::move(src)};
    }
    case DocumentKind::dynsys: {
      auto src = parse_dynsys(lines);
      validate_dynsys(src, lines);
      return {std::move(src)};
    }
  }
  throw ParseError({1, 1}, "unknown document kind");
}

Document parse_file(const std::filesystem::path& path) {
  const auto dir = path.parent_path();
  return parse(read_file(path), [&dir](const std::string& use) { return read_file(dir / use); });
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

template <typename Decls>
std::vector<std::string> names_of(const Decls& decls) {
  std::vector<std::string> out;
  for (const auto& d : decls) out.push_back(d.name);
  return out;
}

void print_monoid(std::ostringstream& out, const MonoidSource& m) {
  out << "elements " << join(names_of(m.elements)) << "\n";
  out << "unit " << m.unit.name << "\n";
  for (const auto& row : m.rows) out << "row " << row.element << " : " << join(row.products) << "\n";
}

}  // namespace

std::string print(const Document& doc) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, CategorySource>) {
          out << "objects " << join(names_of(src.objects)) << "\n";
          for (const auto& m : src.morphisms) out << "mor " << m.name << " : " << m.dom << " -> " << m.cod << "\n";
          for (const auto& c : src.composites)
            out << "cmp " << c.first << " " << c.second << " = " << c.result << "\n";
        } else if constexpr (std::is_same_v<T, MonoidSource>) {
          print_monoid(out, src);
        } else if constexpr (std::is_same_v<T, ActionSource>) {
          out << "use " << src.use.name << "\n";
          out << "carrier " << join(names_of(src.carrier)) << "\n";
          for (const auto& on : src.actions) {
            out << "on " << on.element << " :";
            for (const auto& m : on.maps) out << " " << m.from << "->" << m.to;
            out << "\n";
          }
        } else {
          for (const auto& s : src.steps) out << s.from << " -> " << s.to << "\n";
        }
      },
      doc.body);
  return out.str();
}

namespace {

bool same(const MonoidSource& a, const MonoidSource& b) {
  if (names_of(a.elements) != names_of(b.elements) || a.unit.name != b.unit.name) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i].element != b.rows[i].element || a.rows[i].products != b.rows[i].products) return false;
  return true;
}

}  // namespace

bool structurally_equal(const Document& a, const Document& b) {
  if (a.kind() != b.kind()) return false;
  return std::visit(
      [&b](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.body);
        if constexpr (std::is_same_v<T, CategorySource>) {
          if (names_of(x.objects) != names_of(y.objects)) return false;
          if (x.morphisms.size() != y.morphisms.size() || x.composites.size() != y.composites.size()) return false;
          for (std::size_t i = 0; i < x.morphisms.size(); ++i) {
            const auto& m = x.morphisms[i];
            const auto& n = y.morphisms[i];
            if (m.name != n.name || m.dom != n.dom || m.cod != n.cod) return false;
          }
          for (std::size_t i = 0; i < x.composites.size(); ++i) {
            const auto& c = x.composites[i];
            const auto& d = y.composites[i];
            if (c.first != d.first || c.second != d.second || c.result != d.result) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, MonoidSource>) {
          return same(x, y);
        } else if constexpr (std::is_same_v<T, ActionSource>) {
          if (x.use.name != y.use.name || !same(x.monoid, y.monoid)) return false;
          if (names_of(x.carrier) != names_of(y.carrier) || x.actions.size() != y.actions.size()) return false;
          for (std::size_t i = 0; i < x.actions.size(); ++i) {
            const auto& p = x.actions[i];
            const auto& q = y.actions[i];
            if (p.element != q.element || p.maps.size() != q.maps.size()) return false;
            for (std::size_t k = 0; k < p.maps.size(); ++k)
              if (p.maps[k].from != q.maps[k].from || p.maps[k].to != q.maps[k].to) return false;
          }
          return true;
        } else {
          if (x.steps.size() != y.steps.size()) return false;
          for (std::size_t i = 0; i < x.steps.size(); ++i)
            if (x.steps[i].from != y.steps[i].from || x.steps[i].to != y.steps[i].to) return false;
          return true;
        }
      },
      a.body);
}

// ---------------------------------------------------------------------------

FinCategory build_category(const CategorySource& src) {
  CategoryBuilder b;
  for (const auto& o : src.objects) b.add_object(o.name);
  for (const auto& o : src.objects) b.add_identity(*b.find_object(o.name));
  for (const auto& m : src.morphisms)
    b.add_morphism(m.name, *b.find_object(m.dom), *b.find_object(m.cod));
  for (const auto& c : src.composites)
    b.set_composite(*b.find_morphism(c.first), *b.find_morphism(c.second), *b.find_morphism(c.result));
  b.complete_unit_composites();
  return b.build();
}

FinMonoid build_monoid(const MonoidSource& src) {
  FinMonoid m;
  m.elements = names_of(src.elements);
  m.unit = m.index_of(src.unit.name);
  m.table.assign(m.size() * m.size(), 0);
  for (const auto& row : src.rows) {
    const auto e = m.index_of(row.element);
    for (std::size_t f = 0; f < row.products.size(); ++f) m.table[e * m.size() + f] = m.index_of(row.products[f]);
  }
  return m;
}

SetAction build_action(const ActionSource& src) {
  SetAction a{build_monoid(src.monoid), names_of(src.carrier), {}};
  a.act.assign(a.monoid.size(), std::vector<std::size_t>(a.carrier.size(), 0));
  for (const auto& on : src.actions) {
    const auto e = a.monoid.index_of(on.element);
    for (const auto& m : on.maps) a.act[e][a.point_index(m.from)] = a.point_index(m.to);
  }
  return a;
}

DiscreteDynSys build_dynsys(const DynSysSource& src) {
  std::vector<std::string> points;
  for (const auto& s : src.steps) points.push_back(s.from);
  std::vector<std::size_t> step;
  for (const auto& s : src.steps)
    step.push_back(static_cast<std::size_t>(std::find(points.begin(), points.end(), s.to) - points.begin()));
  return DiscreteDynSys(std::move(points), std::move(step));
}

}  // namespace catmodel::dsl

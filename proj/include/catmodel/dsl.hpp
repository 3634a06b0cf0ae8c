#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catmodel/action.hpp"
#include "catmodel/category.hpp"
#include "catmodel/dynsys.hpp"
#include "catmodel/error.hpp"

namespace catmodel::dsl {

// Line-oriented text format. `#` starts a comment; tokens are
// case-sensitive and separated by whitespace, with `:`, `=` and `->`
// standing on their own.
//
//   category   objects a b            monoid    elements e v
//              mor f : a -> b                   unit e
//              cmp f g = h                      row v : v v
//
//   action     use windowpane.mon     dynsys    p -> q
//              carrier A B C D
//              on V : A->C B->D C->C D->D
//
// Category files get `id_<object>` identities and their unit composites
// automatically; other composable pairs without a `cmp` line are left as
// gaps for check_category to report.

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
        pos_(pos),
        message_(message) {}

  SourcePos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

struct NameDecl {
  std::string name;
  SourcePos pos;
};

struct MorDecl {
  std::string name;
  std::string dom;
  std::string cod;
  SourcePos pos;
};

struct CmpDecl {
  std::string first;
  std::string second;
  std::string result;
  SourcePos pos;
};

struct CategorySource {
  std::vector<NameDecl> objects;
  std::vector<MorDecl> morphisms;
  std::vector<CmpDecl> composites;
};

struct RowDecl {
  std::string element;
  std::vector<std::string> products;
  SourcePos pos;
};

struct MonoidSource {
  std::vector<NameDecl> elements;
  NameDecl unit;
  std::vector<RowDecl> rows;
};

struct Mapping {
  std::string from;
  std::string to;
};

struct OnDecl {
  std::string element;
  std::vector<Mapping> maps;
  SourcePos pos;
};

struct ActionSource {
  NameDecl use;          // path of the monoid file as written
  MonoidSource monoid;   // the resolved monoid
  std::vector<NameDecl> carrier;
  std::vector<OnDecl> actions;
};

struct StepDecl {
  std::string from;
  std::string to;
  SourcePos pos;
};

struct DynSysSource {
  std::vector<StepDecl> steps;
};

enum class DocumentKind { category, monoid, action, dynsys };

struct Document {
  std::variant<CategorySource, MonoidSource, ActionSource, DynSysSource> body;

  DocumentKind kind() const { return static_cast<DocumentKind>(body.index()); }
};

/// Reads the text of a `use`d file. Throwing makes the `use` line fail.
using Resolver = std::function<std::string(const std::string& path)>;

/// Parses and validates a document. Throws ParseError for syntax errors,
/// duplicate names and undeclared references. Action documents need a
/// resolver for their `use` line.
Document parse(std::string_view text, const Resolver& resolver = {});

/// Reads `path`, resolving `use` lines relative to its directory.
Document parse_file(const std::filesystem::path& path);

/// Canonical text; parse(print(d)) is structurally identical to d.
std::string print(const Document& doc);

/// Equality ignoring source positions.
bool structurally_equal(const Document& a, const Document& b);

FinCategory build_category(const CategorySource& src);
FinMonoid build_monoid(const MonoidSource& src);
SetAction build_action(const ActionSource& src);
DiscreteDynSys build_dynsys(const DynSysSource& src);

std::string_view kind_name(DocumentKind kind);

}  // namespace catmodel::dsl

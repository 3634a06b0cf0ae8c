// catmodel: command-line front end for the finite category toolkit.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "catmodel/action.hpp"
#include "catmodel/category.hpp"
#include "catmodel/dsl.hpp"
#include "catmodel/dynsys.hpp"
#include "catmodel/error.hpp"
#include "catmodel/functor.hpp"
#include "catmodel/matrix.hpp"

namespace {

using namespace catmodel;

enum Exit : int { ok = 0, violation = 1, parse_failure = 2, limit_exceeded = 3, usage = 4 };

// Input that could not be turned into a model: unreadable file, bad literal,
// unknown name on the command line.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A category whose composition table has gaps; reported like a violation.
struct GapError : std::runtime_error {
  std::vector<std::pair<std::string, std::string>> gaps;
  GapError() : std::runtime_error("incomplete composition table") {}
};

dsl::Document load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw InputError(path + ": cannot read file");
  try {
    return dsl::parse_file(path);
  } catch (const dsl::ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_violations(const ValidationReport& r) {
  for (const auto& v : r.violations) {
    std::cout << "violation " << v.law;
    for (const auto& w : v.witness) std::cout << " " << w;
    std::cout << "\n";
  }
}

void require_complete(const FinCategory& c) {
  const auto gaps = c.composition_gaps();
  if (gaps.empty()) return;
  GapError e;
  for (auto [g, h] : gaps) e.gaps.emplace_back(c.name(g), c.name(h));
  throw e;
}

// Category and monoid files both describe a category.
FinCategory load_category(const std::string& path) {
  const auto doc = load(path);
  FinCategory c;
  switch (doc.kind()) {
    case dsl::DocumentKind::category:
      c = dsl::build_category(std::get<dsl::CategorySource>(doc.body));
      break;
    case dsl::DocumentKind::monoid:
      c = monoid_to_category(dsl::build_monoid(std::get<dsl::MonoidSource>(doc.body)));
      break;
    default:
      throw InputError(path + ": expected a category or monoid file, found " +
                       std::string(dsl::kind_name(doc.kind())));
  }
  require_complete(c);
  return c;
}

ObjId object_arg(const FinCategory& c, const std::string& name) {
  auto a = c.find_object(name);
  if (!a) throw InputError("unknown object '" + name + "'");
  return *a;
}

int run_check(const std::string& path) {
  const auto doc = load(path);
  ValidationReport report;
  switch (doc.kind()) {
    case dsl::DocumentKind::category: {
      const auto c = dsl::build_category(std::get<dsl::CategorySource>(doc.body));
      for (auto [g, h] : c.composition_gaps())
        report.add("missing-composite", {c.name(g), c.name(h)});
      if (report.ok()) report = check_category(c);
      break;
    }
    case dsl::DocumentKind::monoid:
      report = check_monoid(dsl::build_monoid(std::get<dsl::MonoidSource>(doc.body)));
      break;
    case dsl::DocumentKind::action: {
      const auto a = dsl::build_action(std::get<dsl::ActionSource>(doc.body));
      report = check_monoid(a.monoid);
      if (report.ok()) report = check_action(a);
      break;
    }
    case dsl::DocumentKind::dynsys:
      report = check_iterate_law(dsl::build_dynsys(std::get<dsl::DynSysSource>(doc.body)), 10);
      break;
  }
  if (report.ok()) {
    std::cout << "ok\n";
    return Exit::ok;
  }
  print_violations(report);
  return Exit::violation;
}

int run_auto(const std::string& path, const std::string& obj) {
  const auto c = load_category(path);
  const auto g = automorphism_group(c, object_arg(c, obj));
  std::cout << "order " << g.morphism_count() << "\n";
  std::cout << "elements";
  for (auto m : g.morphisms()) std::cout << " " << g.name(m);
  std::cout << "\n";
  return Exit::ok;
}

int run_functors(const std::string& src_path, const std::string& dst_path, std::uint64_t limit) {
  const auto src = load_category(src_path);
  const auto dst = load_category(dst_path);
  const auto functors = enumerate_functors(src, dst, limit);
  std::cout << "count " << functors.size() << "\n";
  for (std::size_t k = 0; k < functors.size(); ++k) {
    const auto& f = functors[k];
    std::cout << "functor " << k + 1 << ":";
    for (auto a : src.objects()) std::cout << " " << src.name(a) << "->" << dst.name(f(a));
    std::cout << " |";
    for (auto m : src.morphisms()) std::cout << " " << src.name(m) << "->" << dst.name(f(m));
    std::cout << "\n";
  }
  return Exit::ok;
}

int run_yoneda(const std::string& path, const std::string& obj) {
  const auto c = load_category(path);
  const auto a = object_arg(c, obj);
  bool all_ok = true;
  for (auto b : c.objects()) {
    const auto r = yoneda_check(c, a, hom_functor(c, b));
    all_ok = all_ok && r.report.ok();
    std::cout << "hom(" << c.name(b) << ",-): nat " << r.nat_count << " hom(" << c.name(b) << ","
              << c.name(a) << ") " << r.element_count << " bijection " << (r.report.ok() ? "ok" : "FAIL")
              << "\n";
    if (!r.report.ok()) print_violations(r.report);
  }
  return all_ok ? Exit::ok : Exit::violation;
}

int run_orbit(const std::string& path, const std::string& point) {
  const auto doc = load(path);
  if (doc.kind() != dsl::DocumentKind::action)
    throw InputError(path + ": expected an action file, found " + std::string(dsl::kind_name(doc.kind())));
  const auto a = dsl::build_action(std::get<dsl::ActionSource>(doc.body));
  std::size_t p = 0;
  try {
    p = a.point_index(point);
  } catch (const UnknownPointError& e) {
    throw InputError(e.what());
  }
  std::cout << "orbit";
  for (auto q : orbit(a, p)) std::cout << " " << a.carrier[q];
  std::cout << "\n";
  return Exit::ok;
}

int run_dyn_orbits(const std::string& path) {
  const auto doc = load(path);
  if (doc.kind() != dsl::DocumentKind::dynsys)
    throw InputError(path + ": expected a dynsys file, found " + std::string(dsl::kind_name(doc.kind())));
  const auto d = dsl::build_dynsys(std::get<dsl::DynSysSource>(doc.body));
  std::cout << "point preperiod period\n";
  for (const auto& o : orbit_analysis(d))
    std::cout << d.name(o.point) << " " << o.preperiod << " " << o.period << "\n";
  return Exit::ok;
}

RatMatrix matrix_arg(const std::string& text) {
  try {
    return parse_matrix(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad matrix literal '" + text + "': " + e.what());
  }
}

int run_mat(const std::string& op, const std::vector<std::string>& literals) {
  const auto a = matrix_arg(literals[0]);
  RatMatrix result;
  if (op == "inv") {
    try {
      result = inverse(a);
    } catch (const SingularMatrixError&) {
      std::cout << "singular\n";
      return Exit::violation;
    }
  } else {
    const auto b = matrix_arg(literals[1]);
    result = op == "mul" ? mat_mul(a, b) : mat_add(a, b);
  }
  std::cout << format_matrix(result) << "\n";
  return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categories, monoid actions, dynamical systems and exact matrices", "catmodel"};
  app.require_subcommand(1);

  std::string file, file2, name;
  std::uint64_t limit = 10'000'000;
  std::string mat_op;
  std::vector<std::string> literals;

  auto* check = app.add_subcommand("check", "Validate a .cat, .mon, .act or .dyn file");
  check->add_option("FILE", file)->required();

  auto* aut = app.add_subcommand("auto", "Automorphism group of an object");
  aut->add_option("FILE", file)->required();
  aut->add_option("OBJ", name)->required();

  auto* functors = app.add_subcommand("functors", "Enumerate functors SRC -> DST");
  functors->add_option("SRC", file)->required();
  functors->add_option("DST", file2)->required();
  functors->add_option("--limit", limit, "Refuse searches larger than this bound");

  auto* yoneda = app.add_subcommand("yoneda", "Check Nat(hom(OBJ,-), hom(c,-)) against hom(c,OBJ)");
  yoneda->add_option("FILE", file)->required();
  yoneda->add_option("OBJ", name)->required();

  auto* act = app.add_subcommand("act", "Monoid actions");
  act->require_subcommand(1);
  auto* act_orbit = act->add_subcommand("orbit", "Orbit of a point");
  act_orbit->add_option("FILE", file)->required();
  act_orbit->add_option("POINT", name)->required();

  auto* dyn = app.add_subcommand("dyn", "Discrete dynamical systems");
  dyn->require_subcommand(1);
  auto* dyn_orbits = dyn->add_subcommand("orbits", "Preperiod and period of every point");
  dyn_orbits->add_option("FILE", file)->required();

  auto* mat = app.add_subcommand("mat", "Exact matrix arithmetic on literals like \"1, 2; 3, 4\"");
  mat->add_option("OP", mat_op)->required()->check(CLI::IsMember({"mul", "add", "inv"}));
  mat->add_option("LITERAL", literals)->required()->expected(1, 2);

  try {
    app.parse(argc, argv);
    if (*mat) {
      const std::size_t arity = mat_op == "inv" ? 1 : 2;
      if (literals.size() != arity)
        throw CLI::ValidationError("mat " + mat_op + " takes " + std::to_string(arity) + " matrix literal(s)");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return Exit::usage;
  }

  try {
    if (*check) return run_check(file);
    if (*aut) return run_auto(file, name);
    if (*functors) return run_functors(file, file2, limit);
    if (*yoneda) return run_yoneda(file, name);
    if (*act_orbit) return run_orbit(file, name);
    if (*dyn_orbits) return run_dyn_orbits(file);
    if (*mat) return run_mat(mat_op, literals);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::parse_failure;
  } catch (const GapError& e) {
    for (const auto& [g, h] : e.gaps) std::cout << "violation missing-composite " << g << " " << h << "\n";
    return Exit::violation;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::limit_exceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::violation;
  }
  return Exit::usage;
}

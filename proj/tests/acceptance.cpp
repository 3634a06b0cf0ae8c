// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance used is pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "catmodel/action.hpp"
#include "catmodel/category.hpp"
#include "catmodel/corpus.hpp"
#include "catmodel/dynsys.hpp"
#include "catmodel/error.hpp"
#include "catmodel/functor.hpp"
#include "catmodel/matrix.hpp"
#include "cli_cases.hpp"
#include "oracles.hpp"

using namespace catmodel;

namespace {

constexpr double kFlowTolerance = 1e-9;
constexpr double kDefectMinDeviation = 2.0;
constexpr std::uint64_t kIterateMaxExp = 10;
constexpr std::size_t kRandomInverses = 200;
constexpr std::size_t kRandomGraphs = 50;
constexpr std::size_t kMaxGraphSize = 50;

// Collects failure notes for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int run(const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.failures.empty() ? "PASS " : "FAIL ") << name << " [" << ms << " ms]";
  if (!o.summary.empty()) std::cout << " " << o.summary;
  std::cout << "\n";
  for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) std::cout << "    " << o.failures[k] << "\n";
  if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
  std::cout.flush();
  return o.failures.empty() ? 0 : 1;
}

std::string report_text(const ValidationReport& r) {
  std::string s;
  for (std::size_t k = 0; k < r.violations.size() && k < 3; ++k) {
    s += r.violations[k].law;
    for (const auto& w : r.violations[k].witness) s += " " + w;
    s += "; ";
  }
  return s;
}

const std::vector<Rational> kTrits{-1, 0, 1};

// Zero plus every matrix with a single entry in {-1, 1}.
std::vector<RatMatrix> unit_support(std::size_t rows, std::size_t cols) {
  std::vector<RatMatrix> out{zero(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int s : {-1, 1}) {
        auto m = zero(rows, cols);
        m(i, j) = s;
        out.push_back(m);
      }
  return out;
}

void matrix_laws(Outcome& o) {
  // 2x2: every triple over {-1, 0, 1}, checked in chunks of a fixed first entry.
  const auto square = all_matrices(2, 2, kTrits);
  std::size_t triples = 0;
  for (const auto& a : square) {
    std::vector<MatrixTriple> chunk;
    chunk.reserve(square.size() * square.size());
    for (const auto& b : square)
      for (const auto& c : square) chunk.push_back({a, b, c});
    const auto r = check_enrichment(2, 2, 2, chunk);
    triples += chunk.size();
    o.expect(r.ok(), "2x2: " + report_text(r));
  }

  // 2x3: every pair over {-1, 0, 1} for the additive laws, then every triple
  // from the unit-support families in each product and distributivity shape.
  const auto wide = all_matrices(2, 3, kTrits);
  std::size_t pairs = 0;
  for (const auto& a : wide) {
    std::vector<MatrixTriple> chunk;
    for (const auto& b : wide) chunk.push_back({a, b, a});
    pairs += chunk.size();
    const auto r = check_enrichment(2, 3, 2, chunk);
    o.expect(r.ok(), "2x3 pairs: " + report_text(r));
  }
  const auto u23 = unit_support(2, 3);
  const auto u32 = unit_support(3, 2);
  const auto u22 = unit_support(2, 2);
  std::vector<MatrixTriple> shaped;
  for (const auto& a : u23) {
    for (const auto& b : u23)
      for (const auto& c : u23) shaped.push_back({a, b, c});  // additive
    for (const auto& b : u32)
      for (const auto& c : u22) shaped.push_back({a, b, c});  // product associativity
    for (const auto& b : u32)
      for (const auto& c : u32) shaped.push_back({a, b, c});  // left distributivity
    for (const auto& b : u23)
      for (const auto& c : u32) shaped.push_back({a, b, c});  // right distributivity
  }
  const auto r = check_enrichment(2, 3, 2, shaped);
  o.expect(r.ok(), "2x3 shaped: " + report_text(r));
  o.summary = std::to_string(triples) + " 2x2 triples, " + std::to_string(pairs) + " 2x3 pairs, " +
              std::to_string(shaped.size()) + " 2x3 shaped triples, zero violations";
}

void example_matrices(Outcome& o) {
  const RatMatrix zeros{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  const RatMatrix average{{1, 2, 0}, {0, 2, -2}, {-2, -3, -1}};
  for (const auto* m : {&zeros, &average}) {
    o.expect(oracle::determinant(*m) == 0, "oracle determinant should vanish for " + format_matrix(*m));
    o.expect(!is_invertible(*m), "reported invertible: " + format_matrix(*m));
    bool singular = false;
    try {
      inverse(*m);
    } catch (const SingularMatrixError&) {
      singular = true;
    }
    o.expect(singular, "inverse did not raise singular for " + format_matrix(*m));
  }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::size_t tested = 0, skipped = 0;
  while (tested < kRandomInverses) {
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        m(i, j) = r;
      }
    if (oracle::determinant(m) == 0) {
      ++skipped;
      continue;
    }
    const auto inv = inverse(m);
    o.expect(mat_mul(m, inv) == identity(3), "M * inverse(M) != I for " + format_matrix(m));
    o.expect(oracle::multiply(m, inv) == identity(3), "oracle product != I for " + format_matrix(m));
    ++tested;
  }
  o.summary = "2 singular matrices rejected; " + std::to_string(tested) + " random inverses exact (" +
              std::to_string(skipped) + " singular draws skipped)";
}

void zero_vector_composite(Outcome& o) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto composite = mat_mul(RatMatrix(1, 0), RatMatrix(0, n));
    RatMatrix expected(1, n);
    for (std::size_t j = 0; j < n; ++j) expected(0, j) = 0;
    o.expect(composite == zero_vector(n), "n=" + std::to_string(n) + ": composite differs from zero_vector");
    o.expect(composite == expected, "n=" + std::to_string(n) + ": composite is not the zero row");
  }
  o.summary = "n = 1..5";
}

void dihedral(Outcome& o) {
  const auto d8 = builtin_d8();
  const auto c = d8_category();
  o.expect(is_group(c), "D8 category is not a group");
  o.expect(check_category(c).ok(), "D8 category fails the law scan");
  const auto aut = automorphism_group(c, ObjId{0});
  o.expect(aut.morphism_count() == 8, "automorphism group order " + std::to_string(aut.morphism_count()));

  const auto& act = d8.vertices.act;
  o.expect(check_action(d8.vertices).ok(), "vertex action fails the action laws");
  std::set<std::vector<std::size_t>> perms(act.begin(), act.end());
  o.expect(perms.size() == 8, std::to_string(perms.size()) + " distinct vertex permutations");

  // Panel labels (top-left, top-right, bottom-left, bottom-right) as drawn.
  const std::string rot90 = "BDAC", rot180 = "DCBA";
  auto position = [](const std::string& panel, char label) { return panel.find(label); };
  for (char label : std::string("ABCD")) {
    const auto once = position(rot90, label);
    const auto twice = position(rot90, "ABCD"[once]);
    o.expect(twice == position(rot180, label), std::string("panel composite moves ") + label + " wrongly");
    const auto p = d8.vertices.point_index(std::string(1, label));
    const auto r90 = d8.monoid.index_of("R90");
    o.expect(act[r90][act[r90][p]] == position(rot180, label),
             std::string("library R90 twice moves ") + label + " wrongly");
  }
  const auto r90 = morphism_named(c, "R90");
  o.expect(c.name(compose(c, r90, r90)) == "R180", "R90;R90 is " + c.name(compose(c, r90, r90)));
  o.summary = "is_group, |Aut| = 8, 8 distinct permutations, R90;R90 = R180";
}

void windowpane(Outcome& o) {
  const auto w = builtin_windowpane();
  const auto& m = w.monoid;
  const auto& rep = w.representation.rep;
  const auto V = m.index_of("V"), H = m.index_of("H"), T = m.index_of("T");
  o.expect(m(V, H) == T, "table(V,H) is " + m.elements[m(V, H)]);
  o.expect(mat_mul(rep[V], rep[H]) == rep[T], "rep(V) rep(H) != rep(T)");
  o.expect(rep[T] == zero(2, 2), "rep(T) is not zero");
  const auto aut = automorphism_group(windowpane_category(), ObjId{0});
  o.expect(aut.morphism_count() == 1, "automorphism group order " + std::to_string(aut.morphism_count()));
  const auto r = check_representation(w.representation);
  o.expect(r.ok(), "check_representation: " + report_text(r));
  std::size_t pairs = 0;
  for (std::size_t e = 0; e < m.size(); ++e)
    for (std::size_t f = 0; f < m.size(); ++f, ++pairs)
      o.expect(oracle::multiply(rep[e], rep[f]) == rep[m(e, f)], "pair " + m.elements[e] + "," + m.elements[f]);
  o.summary = "VH = T, rep(V)rep(H) = 0, |Aut| = 1, " + std::to_string(pairs) + " pairs hold";
}

void functor_counts(Outcome& o) {
  const auto one = terminal_category();
  const auto arrow = arrow_category();
  std::string detail;
  for (const auto& [name, c] : corpus()) {
    const auto from_one = enumerate_functors(one, c).size();
    const auto from_arrow = enumerate_functors(arrow, c).size();
    o.expect(from_one == c.object_count(), name + ": " + std::to_string(from_one) + " functors from O");
    o.expect(from_arrow == c.morphism_count(), name + ": " + std::to_string(from_arrow) + " functors from M");
    detail += name + " " + std::to_string(from_one) + "/" + std::to_string(from_arrow) + ", ";
  }
  o.summary = detail.substr(0, detail.size() - 2);
}

void yoneda_suite(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& [name, c] : corpus()) {
    if (c.object_count() > 3 || c.morphism_count() > 8) continue;
    for (auto x : c.objects())
      for (auto y : c.objects()) {
        const auto r = yoneda_check(c, x, hom_functor(c, y));
        const auto expected = c.hom(y, x).size();
        const auto label = name + " (" + c.name(x) + ", " + c.name(y) + ")";
        o.expect(r.nat_count == expected, label + ": |Nat| = " + std::to_string(r.nat_count));
        o.expect(r.report.ok(), label + ": " + report_text(r.report));
        // Independent look at the unit images: distinct and covering.
        std::set<std::size_t> images(r.unit_images.begin(), r.unit_images.end());
        o.expect(images.size() == r.unit_images.size(), label + ": unit evaluation not injective");
        o.expect(images.size() == expected, label + ": unit evaluation not surjective");
        ++pairs;
      }
  }
  o.summary = std::to_string(pairs) + " object pairs over O, M, D8, windowpane";
}

void pullbacks(Outcome& o) {
  const auto c = divisor_poset(12);
  const std::vector<unsigned> divisors{1, 2, 3, 4, 6, 12};
  std::size_t cospans = 0;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      const auto a = divisors[i], b = divisors[j];
      auto into12 = [&](unsigned d) {
        return morphism_named(c, d == 12 ? "id_12" : "d" + std::to_string(d) + "_12");
      };
      const auto f = into12(a), g = into12(b);
      const auto p = find_pullback(c, f, g);
      const auto label = std::to_string(a) + " -> 12 <- " + std::to_string(b);
      ++cospans;
      if (!p) {
        o.expect(false, label + ": no pullback found");
        continue;
      }
      o.expect(c.name(p->apex) == std::to_string(std::gcd(a, b)), label + ": apex " + c.name(p->apex));
      o.expect(oracle::is_pullback(c, f, g, p->apex, p->p1, p->p2), label + ": universal property fails");
    }
  o.summary = std::to_string(cospans) + " cospans, apex = gcd, universal property re-verified";
}

void dynamics(Outcome& o) {
  std::mt19937_64 rng(515);
  std::uniform_int_distribution<std::size_t> size(1, kMaxGraphSize);
  std::size_t points = 0;
  for (std::size_t trial = 0; trial < kRandomGraphs; ++trial) {
    const auto n = size(rng);
    const auto step = oracle::random_map(rng, n);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("s" + std::to_string(k));
    const DiscreteDynSys d(names, step);
    const auto label = "graph " + std::to_string(trial);

    const auto r = check_iterate_law(d, kIterateMaxExp);
    o.expect(r.ok(), label + ": " + report_text(r));
    for (std::size_t s = 0; s < n; ++s)
      for (std::uint64_t i = 0; i <= kIterateMaxExp; ++i)
        for (std::uint64_t j = 0; j <= kIterateMaxExp; ++j)
          if (oracle::apply_n(step, i, oracle::apply_n(step, j, s)) != d.iterate(i + j, s))
            o.expect(false, label + ": iterate disagrees with repeated application");

    const auto orbits = orbit_analysis(d);
    for (std::size_t s = 0; s < n; ++s) {
      const auto naive = oracle::follow(step, s);
      o.expect(orbits[s].preperiod == naive.preperiod && orbits[s].period == naive.period,
               label + ": point " + std::to_string(s) + " orbit mismatch");
    }
    std::size_t total = 0;
    for (const auto& comp : components(d, orbits)) total += comp.cycle.size() + comp.tail_size;
    o.expect(total == n, label + ": components account for " + std::to_string(total) + " of " + std::to_string(n));
    points += n;
  }
  o.summary = std::to_string(kRandomGraphs) + " graphs, " + std::to_string(points) + " points, i,j <= " +
              std::to_string(kIterateMaxExp);
}

void flows(Outcome& o) {
  const std::vector<double> times{0, 0.5, 1, 2, 3.14};
  const std::vector<FlowState> line{{1.0}, {-2.0}, {0.0}, {0.125}, {3.5}};
  const std::vector<FlowState> plane{{1, 0}, {0, 1}, {-3, 4}, {0.5, -0.25}, {0, 0}};

  SampledFlow exponential{1, [](std::span<const double> s, double t) { return FlowState{std::exp(t) * s[0]}; },
                          times, kFlowTolerance};
  SampledFlow rotation{2,
                       [](std::span<const double> s, double t) {
                         return FlowState{std::cos(t) * s[0] - std::sin(t) * s[1],
                                          std::sin(t) * s[0] + std::cos(t) * s[1]};
                       },
                       times, kFlowTolerance};
  SampledFlow defect{1, [](std::span<const double> s, double t) { return FlowState{s[0] + t * t}; }, times,
                     kFlowTolerance};

  const auto e = check_flow(exponential, line);
  const auto r = check_flow(rotation, plane);
  const auto d = check_flow(defect, line);
  o.expect(e.ok(), "exponential flow rejected: " + report_text(e.report));
  o.expect(r.ok(), "rotation flow rejected: " + report_text(r.report));
  o.expect(!d.ok(), "defect flow accepted");
  o.expect(d.worst_deviation >= kDefectMinDeviation, "defect deviation " + std::to_string(d.worst_deviation));

  std::ostringstream s;
  s << "tolerance " << kFlowTolerance << "; exp worst " << e.worst_deviation << ", rotation worst "
    << r.worst_deviation << ", defect worst " << d.worst_deviation;
  o.summary = s.str();
}

void cli_goldens(Outcome& o) {
  std::size_t passed = 0;
  for (const auto& c : cli::cases()) {
    const auto got = cli::run(CLI_PATH, c.args, FIXTURE_DIR);
    const auto problems = cli::compare(c, got, GOLDEN_DIR);
    o.expect(problems.empty(), c.name + ": " + problems);
    if (problems.empty()) ++passed;
  }
  o.summary = std::to_string(passed) + "/" + std::to_string(cli::cases().size()) + " golden cases";
}

}  // namespace

int main() {
  int failed = 0;
  failed += run("matrix-category-laws", matrix_laws);
  failed += run("example-matrices", example_matrices);
  failed += run("zero-vector-composite", zero_vector_composite);
  failed += run("d8", dihedral);
  failed += run("windowpane", windowpane);
  failed += run("functor-counts", functor_counts);
  failed += run("yoneda-suite", yoneda_suite);
  failed += run("pullback-oracle", pullbacks);
  failed += run("dynamics", dynamics);
  failed += run("flow-checker", flows);
  failed += run("cli-goldens", cli_goldens);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}

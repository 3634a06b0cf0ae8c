#include "catmodel/dynsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "catmodel/error.hpp"

namespace catmodel {

DiscreteDynSys::DiscreteDynSys(std::vector<std::string> points, std::vector<std::size_t> step)
    : points_(std::move(points)) {
  if (step.size() != points_.size())
    throw StructuralError("step has " + std::to_string(step.size()) + " entries for " +
                          std::to_string(points_.size()) + " points");
  for (auto q : step)
    if (q >= points_.size()) throw StructuralError("step leaves the carrier");

  jumps_.push_back(std::move(step));
  for (int k = 1; k < 64; ++k) {
    const auto& half = jumps_.back();
    std::vector<std::size_t> next(half.size());
    for (std::size_t s = 0; s < half.size(); ++s) next[s] = half[half[s]];
    jumps_.push_back(std::move(next));
  }
}

std::size_t DiscreteDynSys::point_index(std::string_view name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw UnknownPointError("unknown point '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t DiscreteDynSys::iterate(std::uint64_t n, std::size_t s) const {
  if (s >= size()) throw UnknownPointError("point index " + std::to_string(s) + " out of range");
  for (std::size_t k = 0; n != 0; ++k, n >>= 1)
    if (n & 1) s = jumps_[k][s];
  return s;
}

std::size_t iterate(const DiscreteDynSys& d, std::uint64_t n, std::size_t s) {
  return d.iterate(n, s);
}

ValidationReport check_iterate_law(const DiscreteDynSys& d, std::uint64_t max_exp) {
  return check_iterate_law(d, max_exp, [&d](std::uint64_t n, std::size_t s) { return d.iterate(n, s); });
}

ValidationReport check_iterate_law(const DiscreteDynSys& d, std::uint64_t max_exp,
                                   const Iterator& iter) {
  ValidationReport report;
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::uint64_t i = 0; i <= max_exp; ++i)
      for (std::uint64_t j = 0; j <= max_exp; ++j)
        if (iter(i, iter(j, s)) != iter(i + j, s))
          report.add("iterate", {d.name(s), std::to_string(i), std::to_string(j)});
  return report;
}

std::vector<OrbitInfo> orbit_analysis(const DiscreteDynSys& d) {
  enum class Mark : unsigned char { unseen, on_path, done };
  const auto& f = d.step();
  std::vector<Mark> mark(d.size(), Mark::unseen);
  std::vector<std::size_t> path_pos(d.size(), 0);
  std::vector<OrbitInfo> info(d.size());

  for (std::size_t start = 0; start < d.size(); ++start) {
    if (mark[start] != Mark::unseen) continue;
    std::vector<std::size_t> path;
    std::size_t p = start;
    while (mark[p] == Mark::unseen) {
      mark[p] = Mark::on_path;
      path_pos[p] = path.size();
      path.push_back(p);
      p = f[p];
    }

    std::size_t tail_end = path.size();
    if (mark[p] == Mark::on_path) {
      // New cycle: path[path_pos[p]..] in step order.
      tail_end = path_pos[p];
      const std::vector<std::size_t> cyc(path.begin() + static_cast<std::ptrdiff_t>(tail_end), path.end());
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        auto& o = info[cyc[k]];
        o.point = cyc[k];
        o.preperiod = 0;
        o.period = cyc.size();
        o.cycle.clear();
        for (std::size_t r = 0; r < cyc.size(); ++r) o.cycle.push_back(cyc[(k + r) % cyc.size()]);
        mark[cyc[k]] = Mark::done;
      }
    }
    // Tail points drain into p, whose info is now final.
    const auto& anchor = info[p];
    for (std::size_t i = 0; i < tail_end; ++i) {
      auto& o = info[path[i]];
      o.point = path[i];
      o.preperiod = (tail_end - i) + anchor.preperiod;
      o.period = anchor.period;
      o.cycle = anchor.cycle;
      mark[path[i]] = Mark::done;
    }
  }
  return info;
}

std::vector<ComponentInfo> components(const DiscreteDynSys& d, const std::vector<OrbitInfo>& orbits) {
  std::map<std::size_t, ComponentInfo> by_root;
  for (std::size_t p = 0; p < d.size(); ++p) {
    const auto& o = orbits.at(p);
    const auto root = *std::min_element(o.cycle.begin(), o.cycle.end());
    auto& comp = by_root[root];
    if (comp.cycle.empty()) {
      auto it = std::find(o.cycle.begin(), o.cycle.end(), root);
      comp.cycle.assign(it, o.cycle.end());
      comp.cycle.insert(comp.cycle.end(), o.cycle.begin(), it);
    }
    if (o.preperiod > 0) ++comp.tail_size;
  }
  std::vector<ComponentInfo> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

SetAction as_naction(const DiscreteDynSys& d, std::uint64_t max_exp) {
  if (max_exp < 1) throw StructuralError("as_naction needs max_exp >= 1");
  const auto n = static_cast<std::size_t>(max_exp) + 1;
  FinMonoid m;
  m.unit = 0;
  for (std::size_t k = 0; k < n; ++k) m.elements.push_back(std::to_string(k));
  m.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.table[i * n + j] = std::min(i + j, n - 1);

  SetAction a{m, d.points(), {}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> fn(d.size());
    for (std::size_t s = 0; s < d.size(); ++s) fn[s] = d.iterate(k, s);
    a.act.push_back(std::move(fn));
  }
  return a;
}

ValidationReport check_truncated_naction(const SetAction& a) {
  const auto n = a.monoid.size();
  ValidationReport report;
  for (std::size_t p = 0; p < a.carrier.size(); ++p)
    if (a.act.at(0).at(p) != p) report.add("identity", {"0", a.carrier[p]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      for (std::size_t p = 0; p < a.carrier.size(); ++p)
        if (a.act[j][a.act[i][p]] != a.act[i + j][p])
          report.add("composition", {std::to_string(i), std::to_string(j), a.carrier[p]});
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string state_text(std::span<const double> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + ")";
}

double max_norm_distance(const FlowState& a, const FlowState& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = std::fabs(a[i] - b[i]);
    if (std::isnan(diff)) return std::numeric_limits<double>::infinity();
    d = std::max(d, diff);
  }
  return d;
}

double max_abs(const FlowState& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

FlowReport check_flow(const SampledFlow& flow, std::span<const FlowState> states) {
  if (!(flow.tolerance > 0.0)) throw Error("flow tolerance must be positive");
  for (double t : flow.times)
    if (!(t >= 0.0)) throw Error("flow sample times must be nonnegative");

  const auto eval = [&](std::span<const double> s, double t) {
    FlowState out;
    try {
      out = flow.evaluator(s, t);
    } catch (const std::exception& e) {
      throw EvaluatorError("evaluator failed at state " + state_text(s) + ", t = " +
                           std::to_string(t) + ": " + e.what());
    }
    if (out.size() != flow.dimension)
      throw EvaluatorError("evaluator returned dimension " + std::to_string(out.size()) +
                           " at state " + state_text(s) + ", t = " + std::to_string(t));
    return out;
  };

  FlowReport r;
  double magnitude = 1.0;
  const auto record = [&](const std::string& law, const FlowState& lhs, const FlowState& rhs,
                          std::vector<std::string> witness) {
    const double dev = max_norm_distance(lhs, rhs);
    magnitude = std::max({magnitude, max_abs(lhs), max_abs(rhs)});
    r.worst_deviation = std::max(r.worst_deviation, dev);
    if (!(dev <= flow.tolerance)) {
      witness.push_back("deviation " + std::to_string(dev));
      r.report.add(law, std::move(witness));
    }
  };

  for (const auto& s : states) {
    if (s.size() != flow.dimension)
      throw EvaluatorError("state " + state_text(s) + " has the wrong dimension");
    record("initial", eval(s, 0.0), s, {state_text(s)});
    for (double t1 : flow.times) {
      const auto after_t1 = eval(s, t1);
      for (double t2 : flow.times) {
        record("semigroup", eval(after_t1, t2), eval(s, t1 + t2),
               {state_text(s), std::to_string(t1), std::to_string(t2)});
      }
    }
  }
  r.roundoff_bound = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return r;
}

}  // namespace catmodel

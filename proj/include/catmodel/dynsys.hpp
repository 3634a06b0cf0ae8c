#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catmodel/action.hpp"
#include "catmodel/report.hpp"

namespace catmodel {

/// A finite set with a where-to-go-next function, i.e. an action of the
/// additive monoid of naturals. Points are addressed by index.
class DiscreteDynSys {
 public:
  /// Throws StructuralError when `step` is not total on the points.
  DiscreteDynSys(std::vector<std::string> points, std::vector<std::size_t> step);

  std::size_t size() const noexcept { return points_.size(); }
  const std::string& name(std::size_t p) const { return points_.at(p); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<std::size_t>& step() const noexcept { return jumps_.front(); }
  std::size_t point_index(std::string_view name) const;  // throws UnknownPointError

  /// f^n(s) via precomputed doubling tables f^(2^k).
  std::size_t iterate(std::uint64_t n, std::size_t s) const;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<std::size_t>> jumps_;  // jumps_[k] = f^(2^k)
};

std::size_t iterate(const DiscreteDynSys& d, std::uint64_t n, std::size_t s);

/// n-fold application to s, exposed so the law check can run against an
/// arbitrary implementation.
using Iterator = std::function<std::size_t(std::uint64_t n, std::size_t s)>;

/// f^i(f^j(s)) = f^(i+j)(s) for every point and all i, j <= max_exp.
ValidationReport check_iterate_law(const DiscreteDynSys& d, std::uint64_t max_exp);
ValidationReport check_iterate_law(const DiscreteDynSys& d, std::uint64_t max_exp,
                                   const Iterator& iter);

struct OrbitInfo {
  std::size_t point = 0;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  /// The cycle in step order, starting at f^preperiod(point).
  std::vector<std::size_t> cycle;
};

/// Tail length and cycle of every point, indexed by point.
std::vector<OrbitInfo> orbit_analysis(const DiscreteDynSys& d);

struct ComponentInfo {
  std::vector<std::size_t> cycle;  // starts at the smallest point index on it
  std::size_t tail_size = 0;       // points of the component not on the cycle
};

/// Connected components of the functional graph in order of their smallest
/// cycle point.
std::vector<ComponentInfo> components(const DiscreteDynSys& d,
                                      const std::vector<OrbitInfo>& orbits);

/// The action of the truncated exponents {0..max_exp}: element k acts by f^k
/// and the table adds with a cap at max_exp. Only products with i + j <=
/// max_exp are exact; check_truncated_naction restricts itself to those.
SetAction as_naction(const DiscreteDynSys& d, std::uint64_t max_exp);
ValidationReport check_truncated_naction(const SetAction& a);

// --- continuous flows ------------------------------------------------------

using FlowState = std::vector<double>;
using FlowEvaluator = std::function<FlowState(std::span<const double> state, double t)>;

struct SampledFlow {
  std::size_t dimension = 0;
  FlowEvaluator evaluator;
  std::vector<double> times;
  double tolerance = 1e-9;
};

struct FlowReport {
  ValidationReport report;
  double worst_deviation = 0.0;  // max-norm, over every law instance
  /// Rounding slack for the observed magnitudes; exact flows stay below it.
  double roundoff_bound = 0.0;

  bool ok() const noexcept { return report.ok(); }
};

/// Checks f(s, 0) = s and f(f(s, t1), t2) = f(s, t1 + t2) within
/// `tolerance` in max-norm for every sampled state and time pair.
/// Throws EvaluatorError naming the input when the evaluator fails or
/// returns the wrong dimension.
FlowReport check_flow(const SampledFlow& flow, std::span<const FlowState> states);

}  // namespace catmodel

#include "catmodel/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "catmodel/error.hpp"

namespace catmodel {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::string dims_text(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

RatMatrix identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& m, const RatMatrix& n) {
  if (m.cols() != n.rows())
    throw DimensionError("cannot multiply " + dims_text(m) + " by " + dims_text(n));
  RatMatrix out(m.rows(), n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& a = m(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n.cols(); ++j) out(i, j) += a * n(k, j);
    }
  return out;
}

RatMatrix mat_add(const RatMatrix& m, const RatMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw DimensionError("cannot add " + dims_text(m) + " and " + dims_text(n));
  std::vector<Rational> e(m.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.entries()[i] + n.entries()[i];
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

RatMatrix mat_neg(const RatMatrix& m) {
  std::vector<Rational> e(m.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -m.entries()[i];
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

namespace {

// Reduces [m | I] in place; returns false when a column has no pivot.
bool gauss_jordan(RatMatrix& a, RatMatrix& inv) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return true;
}

}  // namespace

bool is_invertible(const RatMatrix& m) {
  if (!m.is_square()) return false;
  RatMatrix a = m;
  RatMatrix inv = identity(m.rows());
  return gauss_jordan(a, inv);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("cannot invert non-square " + dims_text(m));
  RatMatrix a = m;
  RatMatrix inv = identity(m.rows());
  if (!gauss_jordan(a, inv)) throw SingularMatrixError();
  return inv;
}

// --- literal format --------------------------------------------------------

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

RatMatrix parse_matrix(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) return RatMatrix(0, 0);
  std::vector<Rational> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (auto row : split(compact, ';')) {
    auto cells = split(row, ',');
    if (rows == 0) cols = cells.size();
    if (cells.size() != cols)
      throw std::invalid_argument("row " + std::to_string(rows + 1) + " has " +
                                  std::to_string(cells.size()) + " entries, expected " +
                                  std::to_string(cols));
    for (auto cell : cells) entries.push_back(parse_rational(cell));
    ++rows;
  }
  return RatMatrix(rows, cols, std::move(entries));
}

std::string format_matrix(const RatMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_rational(m(i, j));
    }
  }
  return out;
}

// --- enrichment ------------------------------------------------------------

namespace {

bool has_dims(const RatMatrix& a, std::size_t r, std::size_t c) {
  return a.rows() == r && a.cols() == c;
}

}  // namespace

ValidationReport check_enrichment(std::size_t m, std::size_t n, std::size_t q,
                                  std::span<const MatrixTriple> sample,
                                  const MatrixArithmetic& ops) {
  ValidationReport report;
  const RatMatrix z = zero(m, n);
  for (const auto& [a, b, c] : sample) {
    const auto witness = [&] {
      return std::vector<std::string>{format_matrix(a), format_matrix(b), format_matrix(c)};
    };
    bool matched = false;

    if (has_dims(a, m, n) && has_dims(b, m, n) && has_dims(c, m, n)) {
      matched = true;
      const auto ab = ops.add(a, b);
      if (ops.add(ab, c) != ops.add(a, ops.add(b, c))) report.add("addition-associativity", witness());
      if (ab != ops.add(b, a)) report.add("addition-commutativity", witness());
      if (ops.add(z, a) != a || ops.add(a, z) != a) report.add("additive-identity", witness());
      const auto na = ops.neg(a);
      if (ops.add(a, na) != z || ops.add(na, a) != z) report.add("additive-inverse", witness());
    }
    if (has_dims(a, m, n) && has_dims(b, n, q) && has_dims(c, q, m)) {
      matched = true;
      if (ops.mul(ops.mul(a, b), c) != ops.mul(a, ops.mul(b, c)))
        report.add("product-associativity", witness());
    }
    if (has_dims(a, m, n) && has_dims(b, n, q) && has_dims(c, n, q)) {
      matched = true;
      if (ops.mul(a, ops.add(b, c)) != ops.add(ops.mul(a, b), ops.mul(a, c)))
        report.add("left-distributivity", witness());
    }
    if (has_dims(a, m, n) && has_dims(b, m, n) && has_dims(c, n, q)) {
      matched = true;
      if (ops.mul(ops.add(a, b), c) != ops.add(ops.mul(a, c), ops.mul(b, c)))
        report.add("right-distributivity", witness());
    }
    if (!matched)
      throw DimensionError("sample triple " + dims_text(a) + ", " + dims_text(b) + ", " +
                           dims_text(c) + " fits no law for dimensions (" + std::to_string(m) +
                           ", " + std::to_string(n) + ", " + std::to_string(q) + ")");
  }
  return report;
}

std::vector<RatMatrix> all_matrices(std::size_t rows, std::size_t cols,
                                    std::span<const Rational> pool) {
  const std::size_t cells = rows * cols;
  std::vector<RatMatrix> out;
  if (pool.empty() && cells > 0) return out;
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    std::vector<Rational> e(cells);
    for (std::size_t i = 0; i < cells; ++i) e[i] = pool[digits[i]];
    out.emplace_back(rows, cols, std::move(e));
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < pool.size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (cells == 0) return out;
  }
}

std::string matrix_name(const RatMatrix& m) {
  std::string body = format_matrix(m);
  body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
  return dims_text(m) + "[" + body + "]";
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Builds a FinCategory from a product-closed set of matrices, objects being
// the listed dimensions.
FinCategory category_from_matrices(const std::vector<std::size_t>& dims,
                                   const std::vector<RatMatrix>& mats) {
  CategoryBuilder b;
  std::map<std::size_t, ObjId> obj;
  for (auto d : dims) obj[d] = b.add_object(std::to_string(d));
  std::unordered_map<std::string, MorId> by_name;
  std::vector<MorId> ids;
  for (const auto& m : mats) {
    auto name = matrix_name(m);
    auto id = b.add_morphism(name, obj.at(m.rows()), obj.at(m.cols()));
    by_name.emplace(std::move(name), id);
    ids.push_back(id);
  }
  for (auto d : dims) {
    auto it = by_name.find(matrix_name(identity(d)));
    if (it == by_name.end())
      throw ClosureError("identity of dimension " + std::to_string(d) + " is not a morphism");
    b.set_identity(obj.at(d), it->second);
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      if (mats[i].cols() != mats[j].rows()) continue;
      const auto prod = mat_mul(mats[i], mats[j]);
      auto it = by_name.find(matrix_name(prod));
      if (it == by_name.end())
        throw ClosureError("product " + matrix_name(mats[i]) + " * " + matrix_name(mats[j]) +
                           " = " + matrix_name(prod) + " escapes the morphism set");
      b.set_composite(ids[i], ids[j], it->second);
    }
  return b.build();
}

}  // namespace

FinCategory as_fincategory(std::span<const std::size_t> dims, std::span<const Rational> pool,
                           const Limits& limits) {
  std::vector<std::size_t> ds(dims.begin(), dims.end());
  if (std::set<std::size_t>(ds.begin(), ds.end()).size() != ds.size())
    throw StructuralError("duplicate dimension");

  std::vector<Rational> unique_pool;
  for (const auto& r : pool)
    if (std::find(unique_pool.begin(), unique_pool.end(), r) == unique_pool.end())
      unique_pool.push_back(r);

  std::uint64_t total = 0;
  for (auto r : ds)
    for (auto c : ds) {
      auto count = saturating_pow(unique_pool.size(), r * c);
      total = count > std::numeric_limits<std::uint64_t>::max() - total
                  ? std::numeric_limits<std::uint64_t>::max()
                  : total + count;
    }
  if (total > limits.max_morphisms) throw LimitExceeded("as_fincategory", total, limits.max_morphisms);

  std::vector<RatMatrix> mats;
  for (auto r : ds)
    for (auto c : ds) {
      auto block = all_matrices(r, c, unique_pool);
      mats.insert(mats.end(), block.begin(), block.end());
    }
  return category_from_matrices(ds, mats);
}

FinCategory generated_matrix_category(std::span<const RatMatrix> generators,
                                      const Limits& limits) {
  std::set<std::size_t> dimset;
  for (const auto& g : generators) {
    dimset.insert(g.rows());
    dimset.insert(g.cols());
  }
  std::vector<std::size_t> dims(dimset.begin(), dimset.end());

  std::vector<RatMatrix> mats;
  std::set<std::string> seen;
  auto push = [&](const RatMatrix& m) {
    if (!seen.insert(matrix_name(m)).second) return;
    mats.push_back(m);
    if (mats.size() > limits.max_morphisms)
      throw LimitExceeded("generated_matrix_category", mats.size(), limits.max_morphisms);
  };
  for (auto d : dims) push(identity(d));
  for (const auto& g : generators) push(g);

  // Saturate: new products only need pairs involving a matrix added since
  // the previous pass.
  std::size_t done = 0;
  while (done < mats.size()) {
    const std::size_t end = mats.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        if (i < done && j < done) continue;
        if (mats[i].cols() != mats[j].rows()) continue;
        push(mat_mul(mats[i], mats[j]));
      }
    done = end;
  }
  return category_from_matrices(dims, mats);
}

// --- vectors ---------------------------------------------------------------

RatMatrix vector_as_morphism(std::span<const Rational> v) {
  return RatMatrix(1, v.size(), std::vector<Rational>(v.begin(), v.end()));
}

RatMatrix zero_vector(std::size_t n) { return mat_mul(RatMatrix(1, 0), RatMatrix(0, n)); }

RatMatrix scale_via_composition(const RatMatrix& v, const Rational& r) {
  if (v.rows() != 1) throw DimensionError("expected a 1xn vector, got " + dims_text(v));
  return mat_mul(RatMatrix{{r}}, v);
}

ValidationReport check_linearity(const RatMatrix& m, std::span<const RatMatrix> vs,
                                 std::span<const Rational> rs) {
  for (const auto& v : vs)
    if (v.rows() != 1 || v.cols() != m.rows())
      throw DimensionError("vector " + dims_text(v) + " does not fit " + dims_text(m));

  ValidationReport report;
  const auto f = [&](const RatMatrix& v) { return mat_mul(v, m); };
  if (f(zero_vector(m.rows())) != zero_vector(m.cols()))
    report.add("zero", {format_matrix(m)});
  for (const auto& v : vs) {
    const auto fv = f(v);
    for (const auto& r : rs) {
      if (f(scale_via_composition(v, r)) != scale_via_composition(fv, r))
        report.add("scalar", {format_matrix(v), format_rational(r)});
    }
    for (const auto& w : vs) {
      if (f(mat_add(v, w)) != mat_add(fv, f(w)))
        report.add("additivity", {format_matrix(v), format_matrix(w)});
    }
  }
  return report;
}

}  // namespace catmodel

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catmodel/category.hpp"
#include "catmodel/rational.hpp"
#include "catmodel/report.hpp"

namespace catmodel {

/// An m x n matrix of exact rationals: the morphism m -> n of the matrix
/// category. Either dimension may be zero.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  bool operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// "MxN" text, used in dimension errors.
std::string dims_text(const RatMatrix& m);

RatMatrix zero(std::size_t rows, std::size_t cols);
RatMatrix identity(std::size_t n);

/// Product in diagrammatic order: M (m x n) then N (n x q) gives m x q.
/// With n = 0 the result is the zero matrix.
RatMatrix mat_mul(const RatMatrix& m, const RatMatrix& n);
RatMatrix mat_add(const RatMatrix& m, const RatMatrix& n);
RatMatrix mat_neg(const RatMatrix& m);

/// Rational Gauss-Jordan; pivots on the first nonzero entry of each column.
bool is_invertible(const RatMatrix& m);
/// Throws DimensionError for non-square input and SingularMatrixError when
/// no inverse exists.
RatMatrix inverse(const RatMatrix& m);

/// Matrix literal: rows separated by `;`, entries by `,`, whitespace ignored.
/// The empty string is the 0x0 matrix. Throws std::invalid_argument.
RatMatrix parse_matrix(std::string_view text);
/// Inverse of parse_matrix, e.g. `1, -1/2; 0, 1`.
std::string format_matrix(const RatMatrix& m);

// --- group enrichment ------------------------------------------------------

struct MatrixTriple {
  RatMatrix first;
  RatMatrix second;
  RatMatrix third;
};

/// Arithmetic under test. Defaults to the library operations; tests swap in
/// faulty implementations to make sure violations are detected.
struct MatrixArithmetic {
  std::function<RatMatrix(const RatMatrix&, const RatMatrix&)> add = mat_add;
  std::function<RatMatrix(const RatMatrix&, const RatMatrix&)> mul = mat_mul;
  std::function<RatMatrix(const RatMatrix&)> neg = mat_neg;
};

/// Checks the enrichment laws on each sampled triple (a, b, c). A triple is
/// tested against every law whose shape it fits, given dimensions (m, n, q):
///   - additive group laws:       a, b, c all m x n
///   - product associativity:     a m x n, b n x q, c q x m
///   - left distributivity:       a m x n, b and c n x q    a(b+c) = ab+ac
///   - right distributivity:      a and b m x n, c n x q    (a+b)c = ac+bc
/// Throws DimensionError for a triple that fits none of them.
ValidationReport check_enrichment(std::size_t m, std::size_t n, std::size_t q,
                                  std::span<const MatrixTriple> sample,
                                  const MatrixArithmetic& ops = {});

/// Every rows x cols matrix with entries drawn from `pool`, in lexicographic
/// (row-major) order of pool positions.
std::vector<RatMatrix> all_matrices(std::size_t rows, std::size_t cols,
                                    std::span<const Rational> pool);

/// The full subcategory of the matrix category on `dims`, with every matrix
/// whose entries come from `pool` as a morphism. Throws ClosureError when a
/// product or identity falls outside that set and LimitExceeded past
/// `limits.max_morphisms`.
FinCategory as_fincategory(std::span<const std::size_t> dims, std::span<const Rational> pool,
                           const Limits& limits = {});

/// The subcategory generated by `generators` (square or not) together with
/// the identities of every dimension they touch, closed under products.
FinCategory generated_matrix_category(std::span<const RatMatrix> generators,
                                      const Limits& limits = {});

/// Morphism name used for a matrix inside a generated FinCategory.
std::string matrix_name(const RatMatrix& m);

// --- vectors as morphisms --------------------------------------------------

/// The 1 x n row for v: the morphism 1 -> n picking out v.
RatMatrix vector_as_morphism(std::span<const Rational> v);
/// Composite 1 -> 0 -> n.
RatMatrix zero_vector(std::size_t n);
/// The composite 1 -r-> 1 -v-> n.
RatMatrix scale_via_composition(const RatMatrix& v, const Rational& r);

/// Checks f(0) = 0, f(rv) = r f(v), f(v + v') = f(v) + f(v') for f(v) = vM
/// over every sampled v, v', r.
ValidationReport check_linearity(const RatMatrix& m, std::span<const RatMatrix> vs,
                                 std::span<const Rational> rs);

}  // namespace catmodel

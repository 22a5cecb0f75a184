#pragma once

#include <optional>
#include <vector>

#include "rv/rational.hpp"

namespace rv {

using QVector = std::vector<Rational>;

struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  QVector row(int r) const;
};

struct RrefResult {
  QMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// exact rref, pivot = leftmost nonzero column then first available row
RrefResult row_reduce(QMatrix m);
int rank(const QMatrix& m);

std::vector<QVector> kernel_basis(const QMatrix& m);
// columns of m that carry pivots, as vectors
std::vector<QVector> image_basis(const QMatrix& m);

// coefficients c with sum c_i * basis_i = v, if membership holds
std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& basis);

// solve m x = b
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

QVector matvec(const QMatrix& m, const QVector& x);

// incremental row space with independence test
class SpanBuilder {
 public:
  explicit SpanBuilder(int cols) : cols_(cols) {}
  // true if v enlarged the span
  bool add(QVector v);
  bool contains(QVector v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  int cols_;
  std::vector<QVector> rows_;       // reduced rows
  std::vector<int> lead_;           // leading column per row
};

}  // namespace rv

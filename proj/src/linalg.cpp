#include "rv/linalg.hpp"

#include <stdexcept>

namespace rv {

QVector QMatrix::row(int r) const {
  QVector out(cols);
  for (int c = 0; c < cols; ++c) out[c] = at(r, c);
  return out;
}

RrefResult row_reduce(QMatrix m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(m);
  return res;
}

int rank(const QMatrix& m) { return row_reduce(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RrefResult rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols, Rational(0));
    v[free] = 1;
    for (int i = 0; i < rr.rank; ++i) {
      int pc = rr.pivot_cols[i];
      v[pc] = -rr.mat.at(i, free);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QVector> image_basis(const QMatrix& m) {
  RrefResult rr = row_reduce(m);
  std::vector<QVector> out;
  for (int c : rr.pivot_cols) {
    QVector v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (static_cast<int>(b.size()) != m.rows) throw std::runtime_error("dimension mismatch");
  QMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult rr = row_reduce(std::move(aug));
  QVector x(m.cols, Rational(0));
  for (int i = 0; i < rr.rank; ++i) {
    int pc = rr.pivot_cols[i];
    if (pc == m.cols) return std::nullopt;  // inconsistent
    x[pc] = rr.mat.at(i, m.cols);
  }
  return x;
}

std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& basis) {
  size_t n = v.size();
  for (const auto& b : basis)
    if (b.size() != n) throw std::runtime_error("dimension mismatch");
  QMatrix m(static_cast<int>(n), static_cast<int>(basis.size()));
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < static_cast<int>(n); ++i) m.at(i, j) = basis[j][i];
  auto x = solve(m, v);
  if (!x) return std::nullopt;
  // solve() picks the pivot solution; verify exactly
  QVector chk(n, Rational(0));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) chk[i] += (*x)[j] * basis[j][i];
  for (size_t i = 0; i < n; ++i)
    if (chk[i] != v[i]) return std::nullopt;
  return x;
}

QVector matvec(const QMatrix& m, const QVector& x) {
  if (static_cast<int>(x.size()) != m.cols) throw std::runtime_error("dimension mismatch");
  QVector out(m.rows, Rational(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && x[j] != 0) out[i] += m.at(i, j) * x[j];
  return out;
}

bool SpanBuilder::add(QVector v) {
  if (static_cast<int>(v.size()) != cols_) throw std::runtime_error("dimension mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (v[lead_[i]] != 0) {
      Rational f = v[lead_[i]];
      for (int c = 0; c < cols_; ++c) v[c] -= f * rows_[i][c];
    }
  }
  int lead = -1;
  for (int c = 0; c < cols_; ++c)
    if (v[c] != 0) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  Rational inv = Rational(1) / v[lead];
  for (int c = 0; c < cols_; ++c) v[c] *= inv;
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

bool SpanBuilder::contains(QVector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (v[lead_[i]] != 0) {
      Rational f = v[lead_[i]];
      for (int c = 0; c < cols_; ++c) v[c] -= f * rows_[i][c];
    }
  }
  for (int c = 0; c < cols_; ++c)
    if (v[c] != 0) return false;
  return true;
}

}  // namespace rv

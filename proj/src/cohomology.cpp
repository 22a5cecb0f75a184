#include "rv/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rv {

FiniteGradedAlgebra FiniteGradedAlgebra::begin_presentation(const std::vector<Generator>& gens) {
  FiniteGradedAlgebra H;
  H.palg_ = std::make_unique<GcaAlgebra>();
  for (const auto& g : gens) H.palg_->declare(g.name, g.degree);
  return H;
}

GcaAlgebra& FiniteGradedAlgebra::presentation() {
  if (!palg_) throw std::runtime_error("no presentation");
  return *palg_;
}

const GcaAlgebra& FiniteGradedAlgebra::presentation_algebra() const {
  if (!palg_) throw std::runtime_error("no presentation");
  return *palg_;
}

static std::string monomial_label(const GcaAlgebra& alg, const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : m.factors) {
    if (!first) os << "*";
    os << alg.generator(g).name;
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

void FiniteGradedAlgebra::index_degree(int d, std::vector<Monomial> monos,
                                       const std::vector<GcaElement>& relations) {
  DegreeData dd;
  dd.monos = std::move(monos);
  for (int c = 0; c < static_cast<int>(dd.monos.size()); ++c) dd.col[dd.monos[c]] = c;
  int n = static_cast<int>(dd.monos.size());
  // rows: every monomial multiple of every relation landing in degree d
  SpanBuilder span(n);
  std::vector<QVector> rows;
  for (const auto& rel : relations) {
    int rd = rel.degree();
    if (rd < 0 || rd > d) continue;
    for (const Monomial& m : palg_->basis(d - rd)) {
      GcaElement prod = make_monomial(*palg_, m, 1) * rel;
      QVector row(n, Rational(0));
      for (const auto& [mono, c] : prod.terms) row[dd.col.at(mono)] = c;
      rows.push_back(std::move(row));
    }
  }
  // echelon with full back-substitution for clean reduce()
  QMatrix mat(static_cast<int>(rows.size()), n);
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j < n; ++j) mat.at(i, j) = rows[i][j];
  RrefResult rr = row_reduce(std::move(mat));
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rr.rank; ++i) {
    dd.rows.push_back(rr.mat.row(i));
    dd.lead.push_back(rr.pivot_cols[i]);
    is_pivot[rr.pivot_cols[i]] = true;
  }
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      dd.basis_cols.push_back(c);
      dd.labels.push_back(monomial_label(*palg_, dd.monos[c]));
    }
  if (static_cast<int>(deg_.size()) != d) throw std::logic_error("degree order");
  deg_.push_back(std::move(dd));
}

void FiniteGradedAlgebra::finish_quotient(const std::vector<GcaElement>& relations, int truncation) {
  if (!palg_) throw std::runtime_error("no presentation");
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw std::runtime_error("relation not homogeneous");
  }
  relations_ = relations;
  int maxgen = 1;
  for (GenId g = 0; g < palg_->num_generators(); ++g)
    maxgen = std::max(maxgen, palg_->generator(g).degree);
  const int hard_cap = 400;
  int zero_run = 0;
  for (int d = 0;; ++d) {
    if (truncation > 0 && d > truncation) {
      truncated_ = true;
      break;
    }
    if (truncation == 0 && d > hard_cap)
      throw std::runtime_error("presentation not closed at truncation");
    index_degree(d, palg_->basis(d), relations_);
    if (deg_[d].basis_cols.empty())
      ++zero_run;
    else
      zero_run = 0;
    if (truncation == 0 && zero_run >= maxgen && d >= maxgen) break;
  }
  top_degree_ = static_cast<int>(deg_.size()) - 1;
  while (top_degree_ > 0 && deg_[top_degree_].basis_cols.empty()) --top_degree_;
  if (dim(0) != 1) throw std::runtime_error("degree-0 component is not the unit line");
}

FiniteGradedAlgebra FiniteGradedAlgebra::from_table(
    const std::vector<std::pair<std::string, int>>& basis,
    const std::vector<TableProduct>& products) {
  FiniteGradedAlgebra H;
  int top = 0;
  for (const auto& [lbl, d] : basis) top = std::max(top, d);
  H.tlabels_.resize(top + 1);
  for (const auto& [lbl, d] : basis) {
    if (d < 0) throw std::runtime_error("negative basis degree");
    if (H.tfind_.count(lbl)) throw std::runtime_error("duplicate basis label: " + lbl);
    H.tfind_[lbl] = {d, static_cast<int>(H.tlabels_[d].size())};
    H.tlabels_[d].push_back(lbl);
  }
  if (H.tlabels_[0].size() != 1) throw std::runtime_error("need exactly one degree-0 basis element");
  H.top_degree_ = top;
  for (const auto& p : products) {
    HIndex a = H.find(p.a), b = H.find(p.b);
    int d = a.degree + b.degree;
    QVector v(d <= top ? H.dim(d) : 0, Rational(0));
    for (const auto& [lbl, c] : p.result) {
      HIndex r = H.find(lbl);
      if (r.degree != d) throw std::runtime_error("product degree mismatch at " + lbl);
      v[r.index] += c;
    }
    H.ttable_[{a.degree, a.index}][{b.degree, b.index}] = v;
    // graded commutativity fills the transpose
    int sign = (a.degree % 2 != 0 && b.degree % 2 != 0) ? -1 : 1;
    QVector w = v;
    for (auto& c : w) c *= sign;
    H.ttable_[{b.degree, b.index}][{a.degree, a.index}] = w;
  }
  return H;
}

const QVector* FiniteGradedAlgebra::table_entry(HIndex a, HIndex b) const {
  auto it = ttable_.find({a.degree, a.index});
  if (it == ttable_.end()) return nullptr;
  auto jt = it->second.find({b.degree, b.index});
  return jt == it->second.end() ? nullptr : &jt->second;
}

int FiniteGradedAlgebra::dim(int d) const {
  if (d < 0 || d > top_degree_) return 0;
  if (palg_) return d < static_cast<int>(deg_.size()) ? static_cast<int>(deg_[d].basis_cols.size()) : 0;
  return static_cast<int>(tlabels_[d].size());
}

int FiniteGradedAlgebra::total_dim() const {
  int t = 0;
  for (int d = 0; d <= top_degree_; ++d) t += dim(d);
  return t;
}

const std::string& FiniteGradedAlgebra::label(int d, int i) const {
  if (palg_) return deg_.at(d).labels.at(i);
  return tlabels_.at(d).at(i);
}

HIndex FiniteGradedAlgebra::find(const std::string& lbl) const {
  if (!palg_) {
    auto it = tfind_.find(lbl);
    if (it == tfind_.end()) throw std::runtime_error("unknown basis label: " + lbl);
    return it->second;
  }
  for (int d = 0; d <= top_degree_; ++d)
    for (int i = 0; i < dim(d); ++i)
      if (deg_[d].labels[i] == lbl) return {d, i};
  throw std::runtime_error("unknown basis label: " + lbl);
}

std::string FiniteGradedAlgebra::poincare() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= top_degree_; ++d) {
    int n = dim(d);
    if (n == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0)
      os << n;
    else {
      if (n > 1) os << n << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

HElem FiniteGradedAlgebra::zero(int degree) const {
  return HElem{degree, QVector(static_cast<size_t>(dim(degree)), Rational(0))};
}

HElem FiniteGradedAlgebra::basis_elem(HIndex b) const {
  HElem e = zero(b.degree);
  e.coords.at(b.index) = 1;
  return e;
}

HElem FiniteGradedAlgebra::add(const HElem& a, const HElem& b) const {
  if (a.degree != b.degree) throw std::runtime_error("degree mismatch");
  HElem out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

HElem FiniteGradedAlgebra::mul(const HElem& a, const HElem& b) const {
  int d = a.degree + b.degree;
  HElem out = zero(d);
  if (d > top_degree_) return out;
  if (palg_) {
    // multiply representative monomials and reduce
    const DegreeData& da = deg_.at(a.degree);
    const DegreeData& db = deg_.at(b.degree);
    GcaElement prod(palg_.get());
    for (size_t i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i] == 0) continue;
      for (size_t j = 0; j < b.coords.size(); ++j) {
        if (b.coords[j] == 0) continue;
        auto [s, m] = palg_->mul(da.monos[da.basis_cols[i]], db.monos[db.basis_cols[j]]);
        if (s != 0) prod.add_term(m, a.coords[i] * b.coords[j] * s);
      }
    }
    if (prod.is_zero()) return out;
    return reduce_in_degree(d, prod);
  }
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      const QVector* v = table_entry({a.degree, static_cast<int>(i)}, {b.degree, static_cast<int>(j)});
      if (!v) continue;
      for (size_t t = 0; t < v->size(); ++t) out.coords[t] += a.coords[i] * b.coords[j] * (*v)[t];
    }
  }
  return out;
}

Rational FiniteGradedAlgebra::pairing(const HElem& a, HIndex dual) const {
  if (a.degree != dual.degree) return 0;
  return a.coords.at(dual.index);
}

Rational FiniteGradedAlgebra::pair_product(HIndex dual, const std::vector<HIndex>& factors) const {
  int total = 0;
  for (const auto& f : factors) total += f.degree;
  if (total != dual.degree) return 0;
  HElem acc = unit();
  for (const auto& f : factors) {
    acc = mul(acc, basis_elem(f));
    if (acc.is_zero()) return 0;
  }
  return pairing(acc, dual);
}

HElem FiniteGradedAlgebra::reduce(const GcaElement& poly) const {
  if (!palg_) throw std::runtime_error("no presentation to reduce against");
  if (poly.is_zero()) return zero(0);
  if (!poly.is_homogeneous()) throw std::runtime_error("reduce needs a homogeneous element");
  int d = poly.degree();
  if (d > top_degree_) {
    if (truncated_) throw std::runtime_error("reduce beyond truncation");
    return zero(d);
  }
  return reduce_in_degree(d, poly);
}

HElem FiniteGradedAlgebra::reduce_in_degree(int d, const GcaElement& poly) const {
  const DegreeData& dd = deg_.at(d);
  QVector v(dd.monos.size(), Rational(0));
  for (const auto& [m, c] : poly.terms) v[dd.col.at(m)] = c;
  for (size_t i = 0; i < dd.rows.size(); ++i) {
    if (v[dd.lead[i]] == 0) continue;
    Rational f = v[dd.lead[i]];
    for (size_t c = 0; c < v.size(); ++c) v[c] -= f * dd.rows[i][c];
  }
  HElem out = zero(d);
  for (size_t i = 0; i < dd.basis_cols.size(); ++i) out.coords[i] = v[dd.basis_cols[i]];
  return out;
}

bool FiniteGradedAlgebra::check_table() const {
  std::vector<HIndex> all;
  for (int d = 0; d <= top_degree_; ++d)
    for (int i = 0; i < dim(d); ++i) all.push_back({d, i});
  for (const auto& a : all)
    for (const auto& b : all) {
      HElem ab = mul(basis_elem(a), basis_elem(b));
      HElem ba = mul(basis_elem(b), basis_elem(a));
      int sign = (odd(a) && odd(b)) ? -1 : 1;
      for (auto& c : ba.coords) c *= sign;
      if (!(ab.degree == ba.degree && ab.coords == ba.coords)) return false;
      for (const auto& c : all) {
        if (a.degree + b.degree + c.degree > top_degree_) continue;
        HElem l = mul(ab, basis_elem(c));
        HElem r = mul(basis_elem(a), mul(basis_elem(b), basis_elem(c)));
        if (!(l.coords == r.coords)) return false;
      }
    }
  return true;
}

}  // namespace rv

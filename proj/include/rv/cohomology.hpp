#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rv/gca.hpp"
#include "rv/linalg.hpp"

namespace rv {

// homogeneous element in the chosen basis of one degree
struct HElem {
  int degree = 0;
  QVector coords;  // size = dim(degree)
  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
};

// basis element id
struct HIndex {
  int degree = 0;
  int index = 0;
  bool operator==(const HIndex&) const = default;
  auto operator<=>(const HIndex&) const = default;
};

// finite-dimensional graded-commutative algebra with a chosen homogeneous basis.
// built either as a quotient of a free gca by a homogeneous ideal (basis =
// surviving monomial normal forms under degreewise row reduction) or from an
// explicit basis + multiplication table.
class FiniteGradedAlgebra {
 public:
  // quotient route, phase 1: declare presentation generators
  static FiniteGradedAlgebra begin_presentation(const std::vector<Generator>& gens);
  GcaAlgebra& presentation();  // valid between begin_presentation and finish_quotient
  const GcaAlgebra& presentation_algebra() const;
  // phase 2: impose homogeneous relations. truncation 0 = detect closure
  // (dimensions vanish for a full window of max generator degree); a positive
  // truncation computes up to that degree with no closure requirement.
  void finish_quotient(const std::vector<GcaElement>& relations, int truncation = 0);

  struct TableProduct {
    std::string a, b;
    std::vector<std::pair<std::string, Rational>> result;
  };
  static FiniteGradedAlgebra from_table(const std::vector<std::pair<std::string, int>>& basis,
                                        const std::vector<TableProduct>& products);

  int top_degree() const { return top_degree_; }
  bool truncated() const { return truncated_; }
  int dim(int d) const;
  int total_dim() const;
  const std::string& label(int d, int i) const;
  HIndex find(const std::string& label) const;
  std::string poincare() const;  // e.g. "1 + t^2 + t^4"

  HElem zero(int degree) const;
  HElem basis_elem(HIndex b) const;
  HElem unit() const { return basis_elem({0, 0}); }
  HElem add(const HElem& a, const HElem& b) const;
  HElem mul(const HElem& a, const HElem& b) const;
  Rational pairing(const HElem& a, HIndex dual) const;

  // coefficient of `dual` in the ordered product of basis elements
  Rational pair_product(HIndex dual, const std::vector<HIndex>& factors) const;

  // quotient route only: class of a homogeneous polynomial in the presentation
  HElem reduce(const GcaElement& poly) const;
  bool has_presentation() const { return palg_ != nullptr; }
  // parity needed for koszul bookkeeping downstream
  bool odd(HIndex b) const { return b.degree % 2 != 0; }

  // table sanity: graded commutativity and associativity on all basis triples
  bool check_table() const;

 private:
  FiniteGradedAlgebra() = default;
  void index_degree(int d, std::vector<Monomial> monos, const std::vector<GcaElement>& relations);
  HElem reduce_in_degree(int d, const GcaElement& poly) const;

  std::unique_ptr<GcaAlgebra> palg_;
  std::vector<GcaElement> relations_;
  int top_degree_ = 0;
  bool truncated_ = false;

  struct DegreeData {
    std::vector<Monomial> monos;            // all monomials, column order
    std::map<Monomial, int, MonomialOrder> col;
    std::vector<QVector> rows;              // echelon rows of the relation span
    std::vector<int> lead;
    std::vector<int> basis_cols;            // non-pivot columns
    std::vector<std::string> labels;
  };
  std::vector<DegreeData> deg_;  // quotient route

  // table route
  std::vector<std::vector<std::string>> tlabels_;  // per degree
  std::map<std::string, HIndex> tfind_;
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, QVector>> ttable_;
  const QVector* table_entry(HIndex a, HIndex b) const;
};

}  // namespace rv

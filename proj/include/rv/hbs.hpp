#pragma once

#include <map>
#include <vector>

#include "rv/sullivan.hpp"

namespace rv {

// generator v⊗(b)★ of the section-space model: degree = deg v - deg b
struct HbsGenerator {
  GenId v;   // source-model generator
  HIndex b;  // basis index in the target algebra
  int degree = 0;
};

// model of the identity component of a self-map space for a formal source:
// free gca on the pairs v⊗(b)★ of positive degree, with the differential
// induced by the source differential through ordered-tuple expansion.
// degree-0 pairs are evaluated by the augmentation u; negative pairs die.
class HbsAlgebra {
 public:
  HbsAlgebra(const PureSullivanModel& W, const FiniteGradedAlgebra& H, const KMap& kmap);
  HbsAlgebra(const HbsAlgebra&) = delete;
  HbsAlgebra& operator=(const HbsAlgebra&) = delete;

  const GcaAlgebra& algebra() const { return E_; }
  const Derivation& differential() const { return delta_; }
  const std::vector<HbsGenerator>& generators() const { return gens_; }
  const PureSullivanModel& source() const { return *W_; }
  const FiniteGradedAlgebra& target() const { return *H_; }

  GenId find(const std::string& vname, const std::string& blabel) const;
  const HbsGenerator& gen(GenId g) const { return gens_.at(g); }

  // augmentation scalar of a degree-0 pair
  Rational u_value(GenId v, HIndex b) const;

  GcaElement delta(GenId g) const { return delta_.image(g); }
  // terms of delta(g) that are a single bare generator
  GcaElement delta_linear(GenId g) const;

  std::vector<GenId> degree_gens(int d) const;
  // matrix of the linearized differential degree d -> d+1
  // (rows = degree_gens(d+1), cols = degree_gens(d))
  QMatrix linear_matrix(int d) const;
  // per-degree dimensions of the homology of the linearized complex,
  // indices 0..maxdeg
  std::vector<int> linearized_homology(int maxdeg) const;
  // kernel of the linearized differential in one degree,
  // coordinates over degree_gens(d)
  std::vector<QVector> linear_cycles(int d) const;

 private:
  GcaElement delta_of(const HbsGenerator& g) const;

  const PureSullivanModel* W_;
  const FiniteGradedAlgebra* H_;
  const KMap* k_;
  GcaAlgebra E_;
  Derivation delta_;
  std::vector<HbsGenerator> gens_;  // indexed by the GenId in E_
  std::map<std::pair<GenId, HIndex>, GenId> pair_id_;
};

}  // namespace rv

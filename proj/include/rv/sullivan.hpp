#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rv/cohomology.hpp"
#include "rv/gca.hpp"

namespace rv {

// two-stage model: closed even base generators, odd fiber generators whose
// differentials are polynomials in the base
struct PureSullivanModel {
  std::unique_ptr<GcaAlgebra> alg;
  std::vector<GenId> base;
  std::vector<GenId> fiber;
  Derivation d;

  bool is_base(GenId g) const;
  bool is_fiber(GenId g) const;
  // no differential has a linear term
  bool is_minimal() const;
};

PureSullivanModel clone_model(const PureSullivanModel& m);

class ModelBuilder {
 public:
  ModelBuilder();
  GenId add_base(const std::string& name, int degree);
  GenId add_fiber(const std::string& name, int degree);
  GcaAlgebra& algebra() { return *m_.alg; }
  GcaElement gen(const std::string& name) { return make_gen(*m_.alg, name); }
  void set_dx(GenId fiber, GcaElement image);
  PureSullivanModel finish();

 private:
  PureSullivanModel m_;
  std::vector<bool> dx_set_;
};

// generator elimination: repeatedly removes pairs (x, h) where dx = c*h + R,
// c a nonzero rational and R free of h; h is replaced by -R/c everywhere.
// order: lowest-degree eligible fiber first, then declaration order; among
// eligible h's in dx, the earliest declared. sign_convention -1 flips every
// surviving fiber generator (an isomorphic model; outputs must not depend on
// the choice).
struct Reduction {
  // stages[0] is a copy of the input; each elimination appends a stage
  std::vector<PureSullivanModel> stages;
  // sections[i]: stages[i+1] -> stages[i]
  std::vector<GcaMorphism> sections;
  std::vector<std::pair<std::string, std::string>> eliminated;  // (fiber, base)
  GcaMorphism w;  // small() -> stages[0] (a copy of the input, same generator ids)
  const PureSullivanModel& small() const { return stages.back(); }
};

Reduction reduce_contractible_pairs(const PureSullivanModel& m, int sign_convention = 1);

// tower of models for the flag bundle data: generators tau_1..tau_{m+k} over
// base c'_1..c'_m, c_1..c_k with d tau_l = sum_{i+j=l} c'_i c_j. stage s of the
// reduction eliminates (tau_s, c'_s); the final stage is minimal.
struct FlagTower {
  int m = 0, k = 0;
  Reduction red;  // red.stages[s] is the stage-s model, s = 0..m
};
FlagTower flag_tower(int m, int k);

// ordered block partitions of {1..s} into consecutive blocks with counts[j-1]
// blocks of size j, computed by the recurrence
// Q^{(s+1)}_{(i_1,...)} = sum_j Q^{(s+1-j)}_{(..., i_j - 1, ...)}
Integer block_partition_count(int s, const std::vector<int>& counts);

// multiplicative map to (H, 0): base generators to their classes, fibers to 0
// unless overridden (odd-sphere fundamental classes)
struct KMap {
  const PureSullivanModel* model = nullptr;
  const FiniteGradedAlgebra* H = nullptr;
  std::vector<HElem> images;

  HElem apply(const GcaElement& poly) const;
  // differentials die and every degree <= maxdeg is hit
  bool check(int maxdeg) const;
};

// H built as a quotient on the base generator names; fiber images zero
KMap make_kmap(const PureSullivanModel& m, const FiniteGradedAlgebra& H);

// degreewise cohomology of a model, for quasi-isomorphism checks in tests
std::vector<int> model_cohomology_dims(const PureSullivanModel& m, int maxdeg);
bool induces_cohomology_iso(const GcaMorphism& w, const PureSullivanModel& src,
                            const PureSullivanModel& dst, int maxdeg);

}  // namespace rv

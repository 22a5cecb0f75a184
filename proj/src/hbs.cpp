#include "rv/hbs.hpp"

#include <functional>
#include <stdexcept>

namespace rv {

HbsAlgebra::HbsAlgebra(const PureSullivanModel& W, const FiniteGradedAlgebra& H,
                       const KMap& kmap)
    : W_(&W), H_(&H), k_(&kmap) {
  for (GenId v = 0; v < W.alg->num_generators(); ++v) {
    int dv = W.alg->generator(v).degree;
    for (int bd = 0; bd < dv; ++bd) {
      for (int bi = 0; bi < H.dim(bd); ++bi) {
        HIndex b{bd, bi};
        std::string name = W.alg->generator(v).name + "⊗(" + H.label(bd, bi) + ")★";
        GenId e = E_.declare(name, dv - bd);
        if (e != static_cast<GenId>(gens_.size())) throw std::logic_error("generator order");
        gens_.push_back({v, b, dv - bd});
        pair_id_[{v, b}] = e;
      }
    }
  }
  delta_ = Derivation(&E_);
  for (GenId e = 0; e < static_cast<GenId>(gens_.size()); ++e)
    delta_.set_image(e, delta_of(gens_[e]));
}

GenId HbsAlgebra::find(const std::string& vname, const std::string& blabel) const {
  GenId v = W_->alg->id_of(vname);
  HIndex b = H_->find(blabel);
  auto it = pair_id_.find({v, b});
  if (it == pair_id_.end()) throw std::runtime_error("no retained pair " + vname + "⊗" + blabel);
  return it->second;
}

Rational HbsAlgebra::u_value(GenId v, HIndex b) const {
  if (W_->alg->generator(v).degree != b.degree)
    throw std::runtime_error("augmentation needs a degree-0 pair");
  const HElem& kv = k_->images.at(v);
  return -kv.coords.at(b.index);
}

// expansion of the source differential: for each monomial v_1...v_r of dv,
// sum over ordered tuples (b_1..b_r) of basis elements with deg b_i <= deg v_i
// whose product pairs nontrivially with b; degree-0 factors evaluate through u,
// the koszul crossing sign is (-1)^{sum_{i<j} deg b_i * deg v_j}, and the
// surviving factors multiply in declaration order
GcaElement HbsAlgebra::delta_of(const HbsGenerator& g) const {
  GcaElement out(&E_);
  const GcaElement dv = W_->d.image(g.v);
  const int need = g.b.degree;
  for (const auto& [mono, coeff] : dv.terms) {
    std::vector<GenId> vs;
    for (const auto& [vg, e] : mono.factors)
      for (int t = 0; t < e; ++t) vs.push_back(vg);
    const int r = static_cast<int>(vs.size());
    std::vector<int> vdeg(r);
    for (int i = 0; i < r; ++i) vdeg[i] = W_->alg->generator(vs[i]).degree;
    std::vector<int> suffix(r + 1, 0);
    for (int i = r - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + vdeg[i];

    std::vector<GenId> efac;
    std::function<void(int, const HElem&, const Rational&, int)> walk =
        [&](int i, const HElem& prod, const Rational& scalar, int cross) {
          if (i == r) {
            if (prod.degree != need) return;
            Rational cpair = prod.coords.at(static_cast<size_t>(g.b.index));
            if (cpair == 0) return;
            GcaElement term = make_one(E_);
            for (GenId eg : efac) term = term * make_gen(E_, eg);
            out += term * (coeff * scalar * cpair * (cross % 2 != 0 ? -1 : 1));
            return;
          }
          for (int bd = 0; bd <= vdeg[i]; ++bd) {
            if (H_->dim(bd) == 0) continue;
            if (prod.degree + bd > need) break;
            if (prod.degree + bd + suffix[i + 1] < need) continue;
            for (int bi = 0; bi < H_->dim(bd); ++bi) {
              HIndex b{bd, bi};
              Rational sc = scalar;
              if (vdeg[i] - bd == 0) {
                sc *= u_value(vs[i], b);
                if (sc == 0) continue;
              }
              HElem np = bd == 0 ? prod : H_->mul(prod, H_->basis_elem(b));
              if (np.is_zero()) continue;
              int cr = cross + bd * suffix[i + 1];
              if (vdeg[i] - bd >= 1) {
                efac.push_back(pair_id_.at({vs[i], b}));
                walk(i + 1, np, sc, cr);
                efac.pop_back();
              } else {
                walk(i + 1, np, sc, cr);
              }
            }
          }
        };
    walk(0, H_->unit(), Rational(1), 0);
  }
  return out;
}

GcaElement HbsAlgebra::delta_linear(GenId g) const {
  GcaElement out(&E_);
  for (const auto& [m, c] : delta_.image(g).terms)
    if (m.factors.size() == 1 && m.factors[0].second == 1) out.add_term(m, c);
  return out;
}

std::vector<GenId> HbsAlgebra::degree_gens(int d) const {
  std::vector<GenId> out;
  for (GenId g = 0; g < static_cast<GenId>(gens_.size()); ++g)
    if (gens_[g].degree == d) out.push_back(g);
  return out;
}

QMatrix HbsAlgebra::linear_matrix(int d) const {
  std::vector<GenId> cols = degree_gens(d);
  std::vector<GenId> rows = degree_gens(d + 1);
  std::map<GenId, int> rowof;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) rowof[rows[i]] = i;
  QMatrix mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    GcaElement lin = delta_linear(cols[j]);
    for (const auto& [m, c] : lin.terms) mat.at(rowof.at(m.factors[0].first), j) = c;
  }
  return mat;
}

std::vector<int> HbsAlgebra::linearized_homology(int maxdeg) const {
  std::vector<int> dims(static_cast<size_t>(maxdeg) + 1, 0);
  int prev_rank = 0;
  for (int d = 0; d <= maxdeg; ++d) {
    QMatrix mat = linear_matrix(d);
    int r = rank(mat);
    dims[static_cast<size_t>(d)] = static_cast<int>(degree_gens(d).size()) - r - prev_rank;
    prev_rank = r;
  }
  return dims;
}

std::vector<QVector> HbsAlgebra::linear_cycles(int d) const {
  QMatrix mat = linear_matrix(d);
  if (mat.cols == 0) return {};
  return kernel_basis(mat);
}

}  // namespace rv

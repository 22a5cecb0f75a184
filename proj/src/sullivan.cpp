#include "rv/sullivan.hpp"

#include <algorithm>
#include <stdexcept>

namespace rv {

bool PureSullivanModel::is_base(GenId g) const {
  return std::find(base.begin(), base.end(), g) != base.end();
}

bool PureSullivanModel::is_fiber(GenId g) const {
  return std::find(fiber.begin(), fiber.end(), g) != fiber.end();
}

bool PureSullivanModel::is_minimal() const {
  for (GenId x : fiber)
    for (const auto& [m, c] : d.image(x).terms)
      if (m.factors.size() == 1 && m.factors[0].second == 1) return false;
  return true;
}

// same generator layout, different algebra object
static GcaElement rebind(const GcaElement& e, const GcaAlgebra* alg) {
  GcaElement out(alg);
  for (const auto& [m, c] : e.terms) out.terms[m] = c;
  return out;
}

PureSullivanModel clone_model(const PureSullivanModel& m) {
  PureSullivanModel out;
  out.alg = std::make_unique<GcaAlgebra>();
  for (GenId g = 0; g < m.alg->num_generators(); ++g)
    out.alg->declare(m.alg->generator(g).name, m.alg->generator(g).degree);
  out.base = m.base;
  out.fiber = m.fiber;
  out.d = Derivation(out.alg.get());
  for (GenId g = 0; g < m.alg->num_generators(); ++g)
    out.d.set_image(g, rebind(m.d.image(g), out.alg.get()));
  return out;
}

ModelBuilder::ModelBuilder() {
  m_.alg = std::make_unique<GcaAlgebra>();
}

GenId ModelBuilder::add_base(const std::string& name, int degree) {
  if (degree % 2 != 0) throw std::runtime_error("base generator must be even: " + name);
  GenId g = m_.alg->declare(name, degree);
  m_.base.push_back(g);
  dx_set_.resize(m_.alg->num_generators(), false);
  return g;
}

GenId ModelBuilder::add_fiber(const std::string& name, int degree) {
  if (degree % 2 == 0) throw std::runtime_error("fiber generator must be odd: " + name);
  GenId g = m_.alg->declare(name, degree);
  m_.fiber.push_back(g);
  dx_set_.resize(m_.alg->num_generators(), false);
  return g;
}

void ModelBuilder::set_dx(GenId fiber, GcaElement image) {
  if (!m_.is_fiber(fiber)) throw std::runtime_error("dx only on fiber generators");
  if (!image.is_zero()) {
    if (!image.is_homogeneous() || image.degree() != m_.alg->generator(fiber).degree + 1)
      throw std::runtime_error("dx degree mismatch for " + m_.alg->generator(fiber).name);
    for (const auto& [m, c] : image.terms)
      for (const auto& [g, e] : m.factors)
        if (!m_.is_base(g))
          throw std::runtime_error("dx must be a base polynomial for " +
                                   m_.alg->generator(fiber).name);
  }
  // images_ sizing happens lazily in the derivation
  if (m_.d.algebra() == nullptr) m_.d = Derivation(m_.alg.get());
  m_.d.set_image(fiber, std::move(image));
  dx_set_[fiber] = true;
}

PureSullivanModel ModelBuilder::finish() {
  if (m_.d.algebra() == nullptr) m_.d = Derivation(m_.alg.get());
  for (GenId x : m_.fiber)
    if (!dx_set_.at(x)) throw std::runtime_error("missing dx for " + m_.alg->generator(x).name);
  if (!m_.d.is_differential()) throw std::runtime_error("differential fails d^2 = 0");
  return std::move(m_);
}

namespace {

// dx decomposed by powers of h: dx = sum_j h^j B_j, each B_j free of h
std::vector<GcaElement> by_h_power(const GcaElement& dx, GenId h, const GcaAlgebra* alg) {
  std::vector<GcaElement> parts;
  for (const auto& [m, c] : dx.terms) {
    int e = m.exponent(h);
    Monomial stripped;
    for (const auto& [g, ge] : m.factors)
      if (g != h) {
        stripped.factors.push_back({g, ge});
        stripped.degree += alg->generator(g).degree * ge;
      }
    while (static_cast<int>(parts.size()) <= e) parts.push_back(GcaElement(alg));
    parts[e].add_term(stripped, c);
  }
  return parts;
}

}  // namespace

Reduction reduce_contractible_pairs(const PureSullivanModel& input, int sign_convention) {
  if (sign_convention != 1 && sign_convention != -1)
    throw std::runtime_error("sign convention must be +1 or -1");
  Reduction red;
  red.stages.push_back(clone_model(input));
  // w starts as the identity onto the stage-0 copy, so the reduction owns
  // every algebra its morphisms touch
  {
    GcaAlgebra* a0 = red.stages[0].alg.get();
    GcaMorphism id(a0, a0);
    for (GenId g = 0; g < a0->num_generators(); ++g) id.set_image(g, make_gen(*a0, g));
    red.w = std::move(id);
  }

  while (true) {
    const PureSullivanModel& cur = red.stages.back();
    // candidate fibers, lowest degree then declaration order
    std::vector<GenId> fibers = cur.fiber;
    std::stable_sort(fibers.begin(), fibers.end(), [&](GenId a, GenId b) {
      return cur.alg->generator(a).degree < cur.alg->generator(b).degree;
    });
    GenId elim_x = -1, elim_h = -1;
    Rational c;
    GcaElement subst;  // image of the eliminated base generator
    for (GenId x : fibers) {
      const GcaElement& dx = cur.d.image(x);
      // bare linear base terms, earliest declared first
      for (GenId h : cur.base) {
        Monomial bare;
        bare.factors = {{h, 1}};
        bare.degree = cur.alg->generator(h).degree;
        Rational coeff = dx.coefficient(bare);
        if (coeff == 0) continue;
        auto parts = by_h_power(dx, h, cur.alg.get());
        // solve c*h + R(h) = 0 for h; one step suffices when R is free of h,
        // otherwise iterate the substitution until the residual vanishes
        GcaElement v = parts[0] * (Rational(-1) / coeff);
        bool ok = false;
        for (int it = 0; it < 32; ++it) {
          GcaMorphism sub(cur.alg.get(), cur.alg.get());
          for (GenId g = 0; g < cur.alg->num_generators(); ++g)
            sub.set_image(g, g == h ? v : make_gen(*cur.alg, g));
          GcaElement residual = sub.apply(dx);
          if (residual.is_zero()) {
            ok = true;
            break;
          }
          GcaElement vn = v - residual * (Rational(1) / coeff);
          if (vn == v) break;
          v = vn;
        }
        if (!ok) continue;
        elim_x = x;
        elim_h = h;
        c = coeff;
        subst = v;
        break;
      }
      if (elim_x >= 0) break;
    }
    if (elim_x < 0) break;

    const PureSullivanModel& prev = red.stages.back();
    PureSullivanModel next;
    next.alg = std::make_unique<GcaAlgebra>();
    for (GenId g = 0; g < prev.alg->num_generators(); ++g) {
      if (g == elim_x || g == elim_h) continue;
      next.alg->declare(prev.alg->generator(g).name, prev.alg->generator(g).degree);
    }
    // sigma: prev -> next (projection)
    GcaMorphism sigma(prev.alg.get(), next.alg.get());
    for (GenId g = 0; g < prev.alg->num_generators(); ++g) {
      if (g == elim_x)
        sigma.set_image(g, GcaElement(next.alg.get()));
      else if (g == elim_h) {
        GcaMorphism names(prev.alg.get(), next.alg.get());
        for (GenId t = 0; t < prev.alg->num_generators(); ++t)
          if (t != elim_x && t != elim_h)
            names.set_image(t, make_gen(*next.alg, prev.alg->generator(t).name));
        sigma.set_image(g, names.apply(subst));
      } else
        sigma.set_image(g, make_gen(*next.alg, prev.alg->generator(g).name));
    }
    for (GenId g : prev.base)
      if (g != elim_h) next.base.push_back(next.alg->id_of(prev.alg->generator(g).name));
    for (GenId g : prev.fiber)
      if (g != elim_x) next.fiber.push_back(next.alg->id_of(prev.alg->generator(g).name));
    next.d = Derivation(next.alg.get());
    for (GenId g : prev.fiber)
      if (g != elim_x)
        next.d.set_image(next.alg->id_of(prev.alg->generator(g).name), sigma.apply(prev.d.image(g)));

    // section: next -> prev, y -> y - (1/c) x * Q_y
    GcaMorphism sec(next.alg.get(), prev.alg.get());
    for (GenId g = 0; g < next.alg->num_generators(); ++g) {
      GenId pg = prev.alg->id_of(next.alg->generator(g).name);
      GcaElement im = make_gen(*prev.alg, pg);
      if (next.is_fiber(g)) {
        auto parts = by_h_power(prev.d.image(pg), elim_h, prev.alg.get());
        GcaElement q(prev.alg.get());
        GcaElement hgen = make_gen(*prev.alg, elim_h);
        for (size_t j = 1; j < parts.size(); ++j) {
          GcaElement geom(prev.alg.get());
          for (size_t a = 0; a + 1 <= j; ++a)
            geom += pow(hgen, static_cast<int>(a)) * pow(subst, static_cast<int>(j - 1 - a));
          q += geom * parts[j];
        }
        im -= make_gen(*prev.alg, elim_x) * q * (Rational(1) / c);
      }
      sec.set_image(g, im);
    }
    if (!sec.commutes_with(next.d, prev.d))
      throw std::logic_error("elimination section fails to commute");

    red.eliminated.push_back({prev.alg->generator(elim_x).name, prev.alg->generator(elim_h).name});
    red.w = compose(red.w, sec);
    red.sections.push_back(std::move(sec));
    red.stages.push_back(std::move(next));
  }

  if (sign_convention == -1) {
    PureSullivanModel& s = red.stages.back();
    for (GenId x : s.fiber) {
      s.d.set_image(x, -s.d.image(x));
      red.w.set_image(x, -red.w.image(x));
    }
    if (!red.sections.empty()) {
      GcaMorphism& last = red.sections.back();
      for (GenId x : s.fiber) last.set_image(x, -last.image(x));
    }
  }
  return red;
}

FlagTower flag_tower(int m, int k) {
  if (m < k || k < 1) throw std::runtime_error("flag tower needs m >= k >= 1");
  ModelBuilder b;
  std::vector<GenId> cp(m + 1, -1), cc(k + 1, -1);
  for (int i = 1; i <= m; ++i) cp[i] = b.add_base("c" + std::to_string(i) + "'", 2 * i);
  for (int j = 1; j <= k; ++j) cc[j] = b.add_base("c" + std::to_string(j), 2 * j);
  std::vector<GenId> tau(m + k + 1, -1);
  for (int l = 1; l <= m + k; ++l) tau[l] = b.add_fiber("tau" + std::to_string(l), 2 * l - 1);
  for (int l = 1; l <= m + k; ++l) {
    GcaElement im(&b.algebra());
    for (int i = 0; i <= std::min(l, m); ++i) {
      int j = l - i;
      if (j < 0 || j > k) continue;
      GcaElement t = i == 0 ? make_one(b.algebra()) : make_gen(b.algebra(), cp[i]);
      if (j > 0) t = t * make_gen(b.algebra(), cc[j]);
      im += t;
    }
    b.set_dx(tau[l], im);
  }
  FlagTower ft;
  ft.m = m;
  ft.k = k;
  ft.red = reduce_contractible_pairs(b.finish());
  if (static_cast<int>(ft.red.eliminated.size()) != m)
    throw std::logic_error("flag tower eliminated an unexpected pair count");
  for (int s = 0; s < m; ++s) {
    if (ft.red.eliminated[s].first != "tau" + std::to_string(s + 1) ||
        ft.red.eliminated[s].second != "c" + std::to_string(s + 1) + "'")
      throw std::logic_error("flag tower eliminated an unexpected pair");
  }
  if (!ft.red.small().is_minimal()) throw std::logic_error("flag tower top stage not minimal");
  return ft;
}

Integer block_partition_count(int s, const std::vector<int>& counts) {
  int weighted = 0, total = 0;
  for (size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] < 0) throw std::runtime_error("negative count");
    weighted += static_cast<int>(j + 1) * counts[j];
    total += counts[j];
  }
  if (weighted != s) throw std::runtime_error("partition type does not sum to s");
  if (s == 0) return 1;
  Integer out = 0;
  for (size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    std::vector<int> rest = counts;
    --rest[j];
    out += block_partition_count(s - static_cast<int>(j + 1), rest);
  }
  return out;
}

HElem KMap::apply(const GcaElement& poly) const {
  if (poly.is_zero()) return H->zero(0);
  if (!poly.is_homogeneous()) throw std::runtime_error("kmap needs homogeneous input");
  int d = poly.degree();
  HElem acc = H->zero(d);
  for (const auto& [m, c] : poly.terms) {
    HElem prod = H->unit();
    for (const auto& [g, e] : m.factors) {
      for (int t = 0; t < e && !prod.is_zero(); ++t) prod = H->mul(prod, images.at(g));
    }
    if (prod.is_zero()) continue;
    for (size_t i = 0; i < prod.coords.size(); ++i) acc.coords[i] += c * prod.coords[i];
  }
  return acc;
}

bool KMap::check(int maxdeg) const {
  for (GenId x : model->fiber) {
    const GcaElement& dx = model->d.image(x);
    if (!dx.is_zero() && !apply(dx).is_zero()) return false;
  }
  for (int d = 1; d <= std::min(maxdeg, H->top_degree()); ++d) {
    if (H->dim(d) == 0) continue;
    SpanBuilder sb(H->dim(d));
    int got = 0;
    for (const Monomial& m : model->alg->basis(d)) {
      HElem h = apply(make_monomial(*model->alg, m, 1));
      if (sb.add(h.coords)) ++got;
      if (got == H->dim(d)) break;
    }
    if (got < H->dim(d)) return false;
  }
  return true;
}

KMap make_kmap(const PureSullivanModel& m, const FiniteGradedAlgebra& H) {
  KMap k;
  k.model = &m;
  k.H = &H;
  k.images.resize(m.alg->num_generators());
  const GcaAlgebra& P = H.presentation_algebra();
  for (GenId g = 0; g < m.alg->num_generators(); ++g) {
    if (m.is_base(g))
      k.images[g] = H.reduce(make_gen(P, m.alg->generator(g).name));
    else
      k.images[g] = H.zero(m.alg->generator(g).degree);
  }
  return k;
}

std::vector<int> model_cohomology_dims(const PureSullivanModel& m, int maxdeg) {
  std::vector<int> dims;
  std::vector<std::vector<Monomial>> bases(maxdeg + 2);
  for (int d = 0; d <= maxdeg + 1; ++d) bases[d] = m.alg->basis(d);
  auto dmatrix = [&](int d) {
    const auto& src = bases[d];
    const auto& dst = bases[d + 1];
    std::map<Monomial, int, MonomialOrder> col;
    for (int i = 0; i < static_cast<int>(dst.size()); ++i) col[dst[i]] = i;
    QMatrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
      GcaElement img = m.d.apply(make_monomial(*m.alg, src[j], 1));
      for (const auto& [mo, c] : img.terms) mat.at(col.at(mo), j) = c;
    }
    return mat;
  };
  int prev_rank = 0;
  for (int d = 0; d <= maxdeg; ++d) {
    QMatrix mat = dmatrix(d);
    int r = rank(mat);
    int z = static_cast<int>(bases[d].size()) - r;
    dims.push_back(z - prev_rank);
    prev_rank = r;
  }
  return dims;
}

bool induces_cohomology_iso(const GcaMorphism& w, const PureSullivanModel& src,
                            const PureSullivanModel& dst, int maxdeg) {
  std::vector<int> ds = model_cohomology_dims(src, maxdeg);
  std::vector<int> dd = model_cohomology_dims(dst, maxdeg);
  if (ds != dd) return false;
  for (int d = 1; d <= maxdeg; ++d) {
    auto sb = src.alg->basis(d);
    auto db = dst.alg->basis(d);
    std::map<Monomial, int, MonomialOrder> scol, dcol;
    for (int i = 0; i < static_cast<int>(sb.size()); ++i) scol[sb[i]] = i;
    for (int i = 0; i < static_cast<int>(db.size()); ++i) dcol[db[i]] = i;
    // kernel of d on the source in degree d
    auto up = src.alg->basis(d + 1);
    std::map<Monomial, int, MonomialOrder> ucol;
    for (int i = 0; i < static_cast<int>(up.size()); ++i) ucol[up[i]] = i;
    QMatrix mat(static_cast<int>(up.size()), static_cast<int>(sb.size()));
    for (int j = 0; j < static_cast<int>(sb.size()); ++j) {
      GcaElement img = src.d.apply(make_monomial(*src.alg, sb[j], 1));
      for (const auto& [mo, c] : img.terms) mat.at(ucol.at(mo), j) = c;
    }
    auto cycles = kernel_basis(mat);
    // span of boundaries in the target
    SpanBuilder span(static_cast<int>(db.size()));
    for (const Monomial& mo : dst.alg->basis(d - 1)) {
      GcaElement img = dst.d.apply(make_monomial(*dst.alg, mo, 1));
      QVector v(db.size(), Rational(0));
      for (const auto& [t, c] : img.terms) v[dcol.at(t)] = c;
      span.add(v);
    }
    int new_dims = 0;
    for (const auto& z : cycles) {
      GcaElement zel(src.alg.get());
      for (int j = 0; j < static_cast<int>(sb.size()); ++j)
        if (z[j] != 0) zel.add_term(sb[j], z[j]);
      GcaElement img = w.apply(zel);
      QVector v(db.size(), Rational(0));
      for (const auto& [t, c] : img.terms) v[dcol.at(t)] = c;
      if (span.add(v)) ++new_dims;
    }
    if (new_dims != ds[d]) return false;
  }
  return true;
}

}  // namespace rv

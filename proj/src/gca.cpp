#include "rv/gca.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rv {

int Monomial::exponent(GenId g) const {
  for (const auto& [gid, e] : factors)
    if (gid == g) return e;
  return 0;
}

GenId Monomial::max_gen() const {
  GenId m = -1;
  for (const auto& [gid, e] : factors) m = std::max(m, gid);
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  GenId top = std::max(a.max_gen(), b.max_gen());
  for (GenId g = top; g >= 0; --g) {
    int ea = a.exponent(g), eb = b.exponent(g);
    if (ea != eb) return ea > eb;
  }
  return false;
}

GenId GcaAlgebra::declare(const std::string& name, int degree) {
  if (byname_.count(name)) throw std::runtime_error("generator redeclared: " + name);
  if (degree <= 0) throw std::runtime_error("generator degree must be positive: " + name);
  GenId g = static_cast<GenId>(gens_.size());
  gens_.push_back({name, degree});
  byname_[name] = g;
  return g;
}

GenId GcaAlgebra::id_of(const std::string& name) const {
  auto it = byname_.find(name);
  if (it == byname_.end()) throw std::runtime_error("unknown generator: " + name);
  return it->second;
}

std::pair<int, Monomial> GcaAlgebra::normalize(const std::vector<std::pair<GenId, int>>& raw) const {
  // expand to a flat sequence of single generators, tracking odd positions for
  // the koszul sign of the stable sort into canonical order
  std::vector<GenId> flat;
  for (const auto& [g, e] : raw) {
    if (e < 0) throw std::runtime_error("negative exponent");
    for (int i = 0; i < e; ++i) flat.push_back(g);
  }
  auto key = [&](GenId g) { return std::pair<int, GenId>(gens_[g].degree, g); };
  // insertion sort counting inversions among odd generators
  long odd_swaps = 0;
  for (size_t i = 1; i < flat.size(); ++i) {
    GenId cur = flat[i];
    size_t j = i;
    while (j > 0 && key(cur) < key(flat[j - 1])) {
      if (gens_[cur].odd() && gens_[flat[j - 1]].odd()) ++odd_swaps;
      flat[j] = flat[j - 1];
      --j;
    }
    flat[j] = cur;
  }
  Monomial m;
  for (size_t i = 0; i < flat.size(); ++i) {
    GenId g = flat[i];
    if (!m.factors.empty() && m.factors.back().first == g) {
      if (gens_[g].odd()) return {0, Monomial{}};
      ++m.factors.back().second;
    } else {
      m.factors.push_back({g, 1});
    }
    m.degree += gens_[g].degree;
  }
  return {odd_swaps % 2 == 0 ? 1 : -1, m};
}

std::pair<int, Monomial> GcaAlgebra::mul(const Monomial& a, const Monomial& b) const {
  std::vector<std::pair<GenId, int>> raw = a.factors;
  raw.insert(raw.end(), b.factors.begin(), b.factors.end());
  return normalize(raw);
}

std::vector<Monomial> GcaAlgebra::basis(int degree) const {
  std::vector<Monomial> out;
  std::vector<std::pair<GenId, int>> cur;
  // generators enumerated by declaration id; normalize() sorts factors
  auto rec = [&](auto&& self, GenId g, int remaining) -> void {
    if (remaining == 0) {
      auto [s, m] = normalize(cur);
      if (s != 0) out.push_back(m);
      return;
    }
    if (g >= num_generators()) return;
    self(self, g + 1, remaining);
    int d = gens_[g].degree;
    int emax = gens_[g].odd() ? 1 : remaining / d;
    for (int e = 1; e <= emax && e * d <= remaining; ++e) {
      cur.push_back({g, e});
      self(self, g + 1, remaining - e * d);
      cur.pop_back();
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

int GcaElement::degree() const {
  if (terms.empty()) return -1;
  return terms.begin()->first.degree;
}

bool GcaElement::is_homogeneous() const {
  if (terms.empty()) return true;
  int d = terms.begin()->first.degree;
  return terms.rbegin()->first.degree == d;
}

GcaElement GcaElement::homogeneous_part(int degree) const {
  GcaElement out(alg_);
  for (const auto& [m, c] : terms)
    if (m.degree == degree) out.terms[m] = c;
  return out;
}

void GcaElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Rational GcaElement::coefficient(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

GcaElement& GcaElement::operator+=(const GcaElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

GcaElement& GcaElement::operator-=(const GcaElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

GcaElement& GcaElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

GcaElement operator*(const GcaElement& a, const GcaElement& b) {
  const GcaAlgebra* alg = a.alg_ ? a.alg_ : b.alg_;
  GcaElement out(alg);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto [s, m] = alg->mul(ma, mb);
      if (s != 0) out.add_term(m, ca * cb * s);
    }
  return out;
}

GcaElement GcaElement::operator-() const {
  GcaElement out(alg_);
  for (const auto& [m, c] : terms) out.terms[m] = -c;
  return out;
}

std::string GcaElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coeff_shown = (a != 1) || m.is_one();
    if (coeff_shown) os << rat_str(a);
    bool need_star = coeff_shown;
    for (const auto& [g, e] : m.factors) {
      if (need_star) os << "*";
      os << alg_->generator(g).name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

GcaElement make_zero(const GcaAlgebra& alg) { return GcaElement(&alg); }

GcaElement make_one(const GcaAlgebra& alg) {
  GcaElement e(&alg);
  e.terms[Monomial{}] = 1;
  return e;
}

GcaElement make_gen(const GcaAlgebra& alg, GenId g) {
  GcaElement e(&alg);
  Monomial m;
  m.factors = {{g, 1}};
  m.degree = alg.generator(g).degree;
  e.terms[m] = 1;
  return e;
}

GcaElement make_gen(const GcaAlgebra& alg, const std::string& name) {
  return make_gen(alg, alg.id_of(name));
}

GcaElement make_monomial(const GcaAlgebra& alg, const Monomial& m, const Rational& c) {
  GcaElement e(&alg);
  e.add_term(m, c);
  return e;
}

GcaElement pow(const GcaElement& a, int n) {
  if (n < 0) throw std::runtime_error("negative power");
  GcaElement out = make_one(*a.algebra());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

Derivation::Derivation(const GcaAlgebra* alg) : alg_(alg) {
  images_.assign(alg->num_generators(), GcaElement(alg));
}

void Derivation::set_image(GenId g, GcaElement im) {
  while (static_cast<int>(images_.size()) < alg_->num_generators())
    images_.push_back(GcaElement(alg_));
  images_.at(g) = std::move(im);
}

GcaElement Derivation::image(GenId g) const {
  if (g >= 0 && g < static_cast<int>(images_.size())) return images_[g];
  return GcaElement(alg_);
}

GcaElement Derivation::apply(const GcaElement& e) const {
  GcaElement out(alg_);
  for (const auto& [mono, coeff] : e.terms) {
    const auto& f = mono.factors;
    int sign_deg = 0;
    for (size_t i = 0; i < f.size(); ++i) {
      auto [g, ex] = f[i];
      GcaElement dg = image(g);
      if (!dg.is_zero()) {
        // left part: factors before i and g^(ex-1), still in canonical order
        Monomial left;
        for (size_t j = 0; j < i; ++j) {
          left.factors.push_back(f[j]);
          left.degree += alg_->generator(f[j].first).degree * f[j].second;
        }
        if (ex > 1) {
          left.factors.push_back({g, ex - 1});
          left.degree += alg_->generator(g).degree * (ex - 1);
        }
        Monomial right;
        for (size_t j = i + 1; j < f.size(); ++j) {
          right.factors.push_back(f[j]);
          right.degree += alg_->generator(f[j].first).degree * f[j].second;
        }
        int s = sign_deg % 2 == 0 ? 1 : -1;
        Rational c = coeff * ex * s;
        GcaElement term = make_monomial(*alg_, left, c) * dg * make_monomial(*alg_, right, 1);
        out += term;
      }
      sign_deg += alg_->generator(g).degree * ex;
    }
  }
  return out;
}

bool Derivation::is_differential() const {
  for (GenId g = 0; g < alg_->num_generators(); ++g) {
    GcaElement dg = image(g);
    if (!dg.is_zero()) {
      if (!dg.is_homogeneous() || dg.degree() != alg_->generator(g).degree + 1) return false;
    }
    if (!apply(dg).is_zero()) return false;
  }
  return true;
}

GcaMorphism::GcaMorphism(const GcaAlgebra* src, const GcaAlgebra* dst) : src_(src), dst_(dst) {
  images_.assign(src->num_generators(), GcaElement(dst));
}

void GcaMorphism::set_image(GenId g, GcaElement im) {
  while (static_cast<int>(images_.size()) < src_->num_generators())
    images_.push_back(GcaElement(dst_));
  images_.at(g) = std::move(im);
}

GcaElement GcaMorphism::apply(const GcaElement& e) const {
  GcaElement out(dst_);
  for (const auto& [mono, coeff] : e.terms) {
    GcaElement prod = make_one(*dst_);
    for (const auto& [g, ex] : mono.factors)
      for (int i = 0; i < ex; ++i) prod = prod * images_.at(g);
    out += prod * coeff;
  }
  return out;
}

bool GcaMorphism::commutes_with(const Derivation& d_src, const Derivation& d_dst) const {
  for (GenId g = 0; g < src_->num_generators(); ++g) {
    GcaElement lhs = apply(d_src.image(g));
    GcaElement rhs = d_dst.apply(images_.at(g));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

GcaMorphism compose(const GcaMorphism& second, const GcaMorphism& first) {
  GcaMorphism out(first.source(), second.target());
  for (GenId g = 0; g < first.source()->num_generators(); ++g)
    out.set_image(g, second.apply(first.image(g)));
  return out;
}

}  // namespace rv

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rv/rational.hpp"

namespace rv {

using GenId = int;

struct Generator {
  std::string name;
  int degree = 0;
  bool odd() const { return degree % 2 != 0; }
};

// product of generator powers; factors kept sorted by (degree, id), exponents >= 1
struct Monomial {
  std::vector<std::pair<GenId, int>> factors;
  int degree = 0;

  bool operator==(const Monomial& o) const { return factors == o.factors; }
  bool is_one() const { return factors.empty(); }
  int exponent(GenId g) const;
  GenId max_gen() const;
};

// total degree ascending; ties broken by exponents read from the last declared
// generator down, larger exponent first. row reduction over columns in this
// order eliminates monomials weighted toward late-declared generators, so pure
// powers of the first declared generator survive as quotient representatives.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class GcaAlgebra {
 public:
  GenId declare(const std::string& name, int degree);
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(GenId g) const { return gens_.at(g); }
  GenId id_of(const std::string& name) const;
  bool has(const std::string& name) const { return byname_.count(name) > 0; }

  // canonical form of a factor sequence read as a left-to-right product.
  // returns sign 0 when a repeated odd generator kills it.
  std::pair<int, Monomial> normalize(const std::vector<std::pair<GenId, int>>& raw) const;
  std::pair<int, Monomial> mul(const Monomial& a, const Monomial& b) const;

  // monomials of the given total degree, ascending in MonomialOrder
  std::vector<Monomial> basis(int degree) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, GenId> byname_;
};

class GcaElement {
 public:
  GcaElement() = default;
  explicit GcaElement(const GcaAlgebra* alg) : alg_(alg) {}

  const GcaAlgebra* algebra() const { return alg_; }
  bool is_zero() const { return terms.empty(); }
  // -1 for zero
  int degree() const;
  bool is_homogeneous() const;
  GcaElement homogeneous_part(int degree) const;

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  GcaElement& operator+=(const GcaElement& o);
  GcaElement& operator-=(const GcaElement& o);
  GcaElement& operator*=(const Rational& c);
  friend GcaElement operator+(GcaElement a, const GcaElement& b) { return a += b; }
  friend GcaElement operator-(GcaElement a, const GcaElement& b) { return a -= b; }
  friend GcaElement operator*(GcaElement a, const Rational& c) { return a *= c; }
  friend GcaElement operator*(const Rational& c, GcaElement a) { return a *= c; }
  friend GcaElement operator*(const GcaElement& a, const GcaElement& b);
  GcaElement operator-() const;
  bool operator==(const GcaElement& o) const { return terms == o.terms; }

  std::string str() const;

  std::map<Monomial, Rational, MonomialOrder> terms;

 private:
  const GcaAlgebra* alg_ = nullptr;
};

GcaElement make_zero(const GcaAlgebra& alg);
GcaElement make_one(const GcaAlgebra& alg);
GcaElement make_gen(const GcaAlgebra& alg, GenId g);
GcaElement make_gen(const GcaAlgebra& alg, const std::string& name);
GcaElement make_monomial(const GcaAlgebra& alg, const Monomial& m, const Rational& c = 1);
GcaElement pow(const GcaElement& a, int n);

// degree +1 derivation determined by generator images (leibniz rule)
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(const GcaAlgebra* alg);
  const GcaAlgebra* algebra() const { return alg_; }
  void set_image(GenId g, GcaElement im);
  // unset images read as zero
  GcaElement image(GenId g) const;
  GcaElement apply(const GcaElement& e) const;
  // d(d(g)) == 0 for every generator and every image degree is |g|+1
  bool is_differential() const;

 private:
  const GcaAlgebra* alg_ = nullptr;
  std::vector<GcaElement> images_;
};

// algebra map determined by generator images
class GcaMorphism {
 public:
  GcaMorphism() = default;
  GcaMorphism(const GcaAlgebra* src, const GcaAlgebra* dst);
  const GcaAlgebra* source() const { return src_; }
  const GcaAlgebra* target() const { return dst_; }
  void set_image(GenId g, GcaElement im);
  const GcaElement& image(GenId g) const { return images_.at(g); }
  GcaElement apply(const GcaElement& e) const;
  // φ∘d_src == d_dst∘φ on generators
  bool commutes_with(const Derivation& d_src, const Derivation& d_dst) const;

 private:
  const GcaAlgebra* src_ = nullptr;
  const GcaAlgebra* dst_ = nullptr;
  std::vector<GcaElement> images_;
};

GcaMorphism compose(const GcaMorphism& second, const GcaMorphism& first);

}  // namespace rv

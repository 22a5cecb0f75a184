#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rv/hbs.hpp"
#include "rv/rational.hpp"

using namespace rv;

namespace {

// two-generator source (x even, y odd, dy = x^m) with target q[x]/(x^m)
struct TwoGen {
  PureSullivanModel m;
  FiniteGradedAlgebra H;
  KMap k;
  TwoGen(int l, int mm) {
    ModelBuilder b;
    b.add_base("x", l);
    GenId y = b.add_fiber("y", l * mm - 1);
    b.set_dx(y, pow(b.gen("x"), mm));
    m = b.finish();
    auto Hq = FiniteGradedAlgebra::begin_presentation({{"x", l}});
    Hq.finish_quotient({pow(make_gen(Hq.presentation(), "x"), mm)});
    H = std::move(Hq);
    k = make_kmap(m, H);
    REQUIRE(k.check(l * mm));
  }
};

}  // namespace

TEST_CASE("closed form for the truncated-polynomial source") {
  for (int l : {2, 4}) {
    for (int m = 2; m <= 8; ++m) {
      CAPTURE(l);
      CAPTURE(m);
      TwoGen t(l, m);
      HbsAlgebra E(t.m, t.H, t.k);

      // generators: x⊗1★ and y⊗(x^s)★ for 0 <= s <= m-1
      REQUIRE(static_cast<int>(E.generators().size()) == m + 1);
      GenId x1 = E.find("x", "1");
      CHECK(E.gen(x1).degree == l);
      CHECK(E.delta(x1).is_zero());
      for (int s = 0; s <= m - 1; ++s) {
        std::string lbl = s == 0 ? "1" : (s == 1 ? "x" : "x^" + std::to_string(s));
        GenId ys = E.find("y", lbl);
        CHECK(E.gen(ys).degree == l * m - 1 - l * s);
        GcaElement want =
            pow(make_gen(E.algebra(), x1), m - s) *
            (Rational(binomial(m, s)) * Rational(s % 2 != 0 ? -1 : 1));
        CHECK(E.delta(ys) == want);
      }
      CHECK(E.differential().is_differential());

      // one homotopy class per fiber-pair degree that survives the linear part
      if (l == 2) {
        std::vector<int> dims = E.linearized_homology(2 * m);
        for (int d = 0; d <= 2 * m; ++d) {
          bool expect = d >= 3 && d % 2 == 1 && d <= 2 * m - 1;
          CHECK(dims[d] == (expect ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("even-sphere source has one class in doubled degree") {
  TwoGen t(8, 2);  // base degree 8, relation x^2
  HbsAlgebra E(t.m, t.H, t.k);
  std::vector<int> dims = E.linearized_homology(16);
  for (int d = 0; d <= 16; ++d) CHECK(dims[d] == (d == 15 ? 1 : 0));
}

TEST_CASE("odd-sphere source") {
  ModelBuilder b;
  GenId x = b.add_fiber("x5", 5);
  b.set_dx(x, GcaElement(&b.algebra()));
  PureSullivanModel m = b.finish();
  auto H = FiniteGradedAlgebra::begin_presentation({{"x5", 5}});
  H.finish_quotient({});
  KMap k = make_kmap(m, H);
  CHECK_FALSE(k.check(5));  // fiber image must be overridden to hit the top class
  k.images[x] = H.basis_elem(H.find("x5"));
  CHECK(k.check(5));

  HbsAlgebra E(m, H, k);
  REQUIRE(E.generators().size() == 1);
  CHECK(E.gen(0).degree == 5);
  CHECK(E.delta(0).is_zero());
  std::vector<int> dims = E.linearized_homology(6);
  for (int d = 0; d <= 6; ++d) CHECK(dims[d] == (d == 5 ? 1 : 0));
  CHECK(E.u_value(x, H.find("x5")) == -1);
  CHECK_THROWS_AS(E.u_value(x, H.find("1")), std::runtime_error);
}

TEST_CASE("cubic-relation source, frozen differential values") {
  // reduced model with one even and one odd generator, dx23 = y8^3
  ModelBuilder b;
  b.add_base("y8", 8);
  GenId x23 = b.add_fiber("x23", 23);
  b.set_dx(x23, pow(b.gen("y8"), 3));
  PureSullivanModel m = b.finish();
  auto H = FiniteGradedAlgebra::begin_presentation({{"y8", 8}});
  H.finish_quotient({pow(make_gen(H.presentation(), "y8"), 3)});
  KMap k = make_kmap(m, H);
  REQUIRE(k.check(16));

  HbsAlgebra E(m, H, k);
  // y8⊗1★ (8), x23⊗1★ (23), x23⊗(y8)★ (15), x23⊗(y8^2)★ (7)
  REQUIRE(E.generators().size() == 4);
  GenId y81 = E.find("y8", "1");
  GenId a = E.find("x23", "1");
  GenId bgen = E.find("x23", "y8");
  GenId c = E.find("x23", "y8^2");
  CHECK(E.gen(y81).degree == 8);
  CHECK(E.gen(a).degree == 23);
  CHECK(E.gen(bgen).degree == 15);
  CHECK(E.gen(c).degree == 7);

  GcaElement u1 = make_gen(E.algebra(), y81);
  CHECK(E.delta(c) == Rational(3) * u1);
  CHECK(E.delta(bgen) == Rational(-3) * pow(u1, 2));
  CHECK(E.delta(a) == pow(u1, 3));
  CHECK(E.differential().is_differential());

  std::vector<int> dims = E.linearized_homology(24);
  for (int d = 0; d <= 24; ++d) CHECK(dims[d] == ((d == 15 || d == 23) ? 1 : 0));
}

TEST_CASE("point target mirrors the source differential") {
  ModelBuilder b;
  b.add_base("h", 2);
  GenId x = b.add_fiber("x", 3);
  b.set_dx(x, pow(b.gen("h"), 2));
  PureSullivanModel m = b.finish();
  auto H = FiniteGradedAlgebra::begin_presentation({});
  H.finish_quotient({});
  KMap k;
  k.model = &m;
  k.H = &H;
  k.images = {H.zero(2), H.zero(3)};
  REQUIRE(k.check(4));

  HbsAlgebra E(m, H, k);
  REQUIRE(E.generators().size() == 2);
  GenId h1 = E.find("h", "1");
  GenId x1 = E.find("x", "1");
  CHECK(E.delta(h1).is_zero());
  CHECK(E.delta(x1) == pow(make_gen(E.algebra(), h1), 2));
  CHECK(E.delta_linear(x1).is_zero());
}

TEST_CASE("grassmannian-stage source, frozen linear values") {
  FlagTower ft = flag_tower(2, 2);
  const PureSullivanModel& W = ft.red.small();

  std::vector<Generator> gens;
  for (int j = 1; j <= 2; ++j) gens.push_back({"c" + std::to_string(j), 2 * j});
  auto H = FiniteGradedAlgebra::begin_presentation(gens);
  GcaAlgebra& P = H.presentation();
  // inverse-series relations of q[c1,c2] at (2,2)
  GcaElement s3 = -pow(make_gen(P, "c1"), 3) + Rational(2) * make_gen(P, "c1") * make_gen(P, "c2");
  GcaElement s4 = pow(make_gen(P, "c1"), 4) - Rational(3) * pow(make_gen(P, "c1"), 2) * make_gen(P, "c2") +
                  pow(make_gen(P, "c2"), 2);
  H.finish_quotient({s3, s4});
  REQUIRE(H.poincare() == "1 + t^2 + 2*t^4 + t^6 + t^8");

  KMap k = make_kmap(W, H);
  REQUIRE(k.check(8));
  HbsAlgebra E(W, H, k);
  CHECK(E.differential().is_differential());

  const GcaAlgebra& A = E.algebra();
  GenId t3c1 = E.find("tau3", "c1");
  GenId t4c12 = E.find("tau4", "c1^2");
  CHECK(E.delta_linear(t3c1) == Rational(2) * make_gen(A, E.find("c2", "1")));
  CHECK(E.delta_linear(t4c12) == make_gen(A, E.find("c2", "1")));
  // full image of tau3⊗(c1)★
  GcaElement c11 = make_gen(A, E.find("c1", "1"));
  GcaElement c21 = make_gen(A, E.find("c2", "1"));
  GcaElement c2c1 = make_gen(A, E.find("c2", "c1"));
  CHECK(E.delta(t3c1) == Rational(-3) * pow(c11, 2) + Rational(2) * c21 - Rational(2) * c11 * c2c1);

  SUBCASE("evenly generated target kills even linearized homology") {
    std::vector<int> dims = E.linearized_homology(8);
    for (int d = 0; d <= 8; d += 2) CHECK(dims[d] == 0);
  }
}

TEST_CASE("larger grassmannian stage keeps the coefficient pattern") {
  FlagTower ft = flag_tower(3, 2);
  const PureSullivanModel& W = ft.red.small();

  auto H = FiniteGradedAlgebra::begin_presentation({{"c1", 2}, {"c2", 4}});
  GcaAlgebra& P = H.presentation();
  auto c1 = make_gen(P, "c1");
  auto c2 = make_gen(P, "c2");
  // inverse-series relations s4, s5 of q[c1,c2] at (3,2)
  GcaElement s4 = pow(c1, 4) - Rational(3) * pow(c1, 2) * c2 + pow(c2, 2);
  GcaElement s5 = -pow(c1, 5) + Rational(4) * pow(c1, 3) * c2 - Rational(3) * c1 * pow(c2, 2);
  H.finish_quotient({s4, s5});
  REQUIRE(H.total_dim() == 10);

  KMap k = make_kmap(W, H);
  REQUIRE(k.check(12));
  HbsAlgebra E(W, H, k);
  CHECK(E.differential().is_differential());
  CHECK(E.delta_linear(E.find("tau4", "c1^2")) ==
        Rational(3) * make_gen(E.algebra(), E.find("c2", "1")));
}

TEST_CASE("no retained generator outside positive degrees") {
  TwoGen t(2, 4);
  HbsAlgebra E(t.m, t.H, t.k);
  for (const auto& g : E.generators()) CHECK(g.degree >= 1);
}

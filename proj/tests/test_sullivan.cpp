#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>

#include "rv/sullivan.hpp"

using namespace rv;

TEST_CASE("elimination of linear pairs, sphere-product shape") {
  ModelBuilder b;
  b.add_base("y4", 4);
  b.add_base("y8", 8);
  b.add_base("y12", 12);
  b.add_base("y16", 16);
  GenId x3 = b.add_fiber("x3", 3);
  GenId x11 = b.add_fiber("x11", 11);
  GenId x15 = b.add_fiber("x15", 15);
  GenId x23 = b.add_fiber("x23", 23);
  b.set_dx(x3, b.gen("y4"));
  b.set_dx(x11, b.gen("y12"));
  b.set_dx(x15, b.gen("y16"));
  b.set_dx(x23, pow(b.gen("y8"), 3));
  PureSullivanModel m = b.finish();
  CHECK_FALSE(m.is_minimal());

  Reduction red = reduce_contractible_pairs(m);
  CHECK(red.eliminated == std::vector<std::pair<std::string, std::string>>{
                              {"x3", "y4"}, {"x11", "y12"}, {"x15", "y16"}});
  const PureSullivanModel& s = red.small();
  CHECK(s.alg->num_generators() == 2);
  CHECK(s.base.size() == 1);
  CHECK(s.fiber.size() == 1);
  CHECK(s.d.image(s.alg->id_of("x23")) == pow(make_gen(*s.alg, "y8"), 3));
  CHECK(s.is_minimal());

  // the surviving fiber needed no correction term
  const GcaAlgebra& A0 = *red.stages[0].alg;
  CHECK(red.w.apply(make_gen(*s.alg, "x23")) == make_gen(A0, "x23"));
  CHECK(red.w.apply(make_gen(*s.alg, "y8")) == make_gen(A0, "y8"));

  // cayley-plane dimensions
  std::vector<int> dims = model_cohomology_dims(s, 24);
  for (int d = 0; d <= 24; ++d) CHECK(dims[d] == ((d == 0 || d == 8 || d == 16) ? 1 : 0));
  CHECK(induces_cohomology_iso(red.w, s, red.stages[0], 17));
}

TEST_CASE("elimination with substitution, even-base shape") {
  ModelBuilder b;
  b.add_base("chi", 2);
  b.add_base("p1'", 4);
  GenId x3 = b.add_fiber("x3", 3);
  GenId x7 = b.add_fiber("x7", 7);
  b.set_dx(x3, -(pow(b.gen("chi"), 2) + b.gen("p1'")));
  b.set_dx(x7, pow(b.gen("chi"), 2) * b.gen("p1'"));
  PureSullivanModel m = b.finish();

  Reduction red = reduce_contractible_pairs(m);
  REQUIRE(red.eliminated == std::vector<std::pair<std::string, std::string>>{{"x3", "p1'"}});
  const PureSullivanModel& s = red.small();
  CHECK(s.d.image(s.alg->id_of("x7")) == -pow(make_gen(*s.alg, "chi"), 4));

  const GcaAlgebra& A0 = *red.stages[0].alg;
  CHECK(red.w.apply(make_gen(*s.alg, "x7")) ==
        make_gen(A0, "x7") + pow(make_gen(A0, "chi"), 2) * make_gen(A0, "x3"));
  CHECK(red.sections[0].commutes_with(red.stages[1].d, red.stages[0].d));

  // complex-projective-space dimensions for the total space
  std::vector<int> dims = model_cohomology_dims(s, 10);
  for (int d = 0; d <= 10; ++d) CHECK(dims[d] == ((d <= 6 && d % 2 == 0) ? 1 : 0));
  CHECK(induces_cohomology_iso(red.w, s, red.stages[0], 10));

  SUBCASE("flipped sign convention gives an isomorphic answer") {
    Reduction neg = reduce_contractible_pairs(m, -1);
    const PureSullivanModel& sn = neg.small();
    CHECK(sn.d.image(sn.alg->id_of("x7")) == pow(make_gen(*sn.alg, "chi"), 4));
    CHECK(sn.d.is_differential());
    CHECK(neg.w.apply(make_gen(*sn.alg, "x7")) ==
          -(make_gen(*neg.stages[0].alg, "x7") +
            pow(make_gen(*neg.stages[0].alg, "chi"), 2) * make_gen(*neg.stages[0].alg, "x3")));
    CHECK(induces_cohomology_iso(neg.w, sn, neg.stages[0], 10));
  }
}

TEST_CASE("minimal input passes through unchanged") {
  ModelBuilder b;
  b.add_base("h", 2);
  GenId x = b.add_fiber("x", 3);
  b.set_dx(x, pow(b.gen("h"), 2));
  PureSullivanModel m = b.finish();
  CHECK(m.is_minimal());

  Reduction red = reduce_contractible_pairs(m);
  CHECK(red.stages.size() == 1);
  CHECK(red.eliminated.empty());
  CHECK(red.w.apply(make_gen(*red.small().alg, "x")) == make_gen(*red.stages[0].alg, "x"));
}

namespace {

// closed form for the stage-s differential of tau_l:
//   sum_{j=s+1}^{m} c'_j c_{l-j}  +  sum_{j=0}^{s} S_j c_{l-j}
// with S_0 = 1 and S_j the signed block-partition polynomial in c_1..c_k,
// where c_0 = 1 and c_r = 0 outside 0 <= r <= k
GcaElement expected_stage_dtau(const PureSullivanModel& st, int m, int k, int s, int l) {
  const GcaAlgebra& A = *st.alg;
  GcaElement out(&A);
  for (int j = s + 1; j <= m; ++j) {
    int r = l - j;
    if (r < 0 || r > k) continue;
    GcaElement t = make_gen(A, "c" + std::to_string(j) + "'");
    if (r > 0) t = t * make_gen(A, "c" + std::to_string(r));
    out += t;
  }
  for (int j = 0; j <= s; ++j) {
    int r = l - j;
    if (r < 0 || r > k) continue;
    GcaElement cr = r == 0 ? make_one(A) : make_gen(A, "c" + std::to_string(r));
    if (j == 0) {
      out += cr;
      continue;
    }
    std::vector<int> type(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
      if (rem == 0) {
        int parts = std::accumulate(type.begin(), type.end(), 0);
        Rational coeff(block_partition_count(j, type));
        if (parts % 2 != 0) coeff = -coeff;
        GcaElement mono = cr * coeff;
        for (int t = 1; t <= k; ++t)
          if (type[t - 1] > 0) mono = mono * pow(make_gen(A, "c" + std::to_string(t)), type[t - 1]);
        out += mono;
        return;
      }
      for (int p = std::min(maxpart, rem); p >= 1; --p) {
        ++type[p - 1];
        rec(rem - p, p);
        --type[p - 1];
      }
    };
    rec(j, k);
  }
  return out;
}

}  // namespace

TEST_CASE("flag tower frozen stages") {
  SUBCASE("smallest tower") {
    FlagTower ft = flag_tower(1, 1);
    CHECK(ft.red.eliminated == std::vector<std::pair<std::string, std::string>>{{"tau1", "c1'"}});
    const PureSullivanModel& s = ft.red.small();
    CHECK(s.alg->num_generators() == 2);
    CHECK(s.d.image(s.alg->id_of("tau2")) == -pow(make_gen(*s.alg, "c1"), 2));
  }
  SUBCASE("two-by-two tower") {
    FlagTower ft = flag_tower(2, 2);
    REQUIRE(ft.red.stages.size() == 3);
    const GcaAlgebra& A1 = *ft.red.stages[1].alg;
    auto g1 = [&](const char* n) { return make_gen(A1, n); };
    CHECK(ft.red.stages[1].d.image(A1.id_of("tau2")) ==
          g1("c2'") + g1("c2") - pow(g1("c1"), 2));
    const GcaAlgebra& A2 = *ft.red.stages[2].alg;
    auto g2 = [&](const char* n) { return make_gen(A2, n); };
    CHECK(ft.red.stages[2].d.image(A2.id_of("tau3")) ==
          pow(g2("c1"), 3) - Rational(2) * g2("c1") * g2("c2"));
    CHECK(ft.red.stages[2].d.image(A2.id_of("tau4")) ==
          pow(g2("c1"), 2) * g2("c2") - pow(g2("c2"), 2));

    // sections composed up to the full tower
    const GcaAlgebra& A0 = *ft.red.stages[0].alg;
    auto g0 = [&](const char* n) { return make_gen(A0, n); };
    CHECK(ft.red.w.apply(make_gen(A2, "tau3")) ==
          g0("tau3") - g0("tau2") * g0("c1") +
              g0("tau1") * (pow(g0("c1"), 2) - g0("c2")));
    CHECK(ft.red.w.apply(make_gen(A2, "tau4")) ==
          g0("tau4") - g0("tau2") * g0("c2") + g0("tau1") * g0("c1") * g0("c2"));
    for (size_t i = 0; i < ft.red.sections.size(); ++i)
      CHECK(ft.red.sections[i].commutes_with(ft.red.stages[i + 1].d, ft.red.stages[i].d));

    // the top stage computes the grassmannian ring
    CHECK(model_cohomology_dims(ft.red.small(), 8) ==
          std::vector<int>{1, 0, 1, 0, 2, 0, 1, 0, 1});
    CHECK(induces_cohomology_iso(ft.red.w, ft.red.small(), ft.red.stages[0], 9));
  }
}

TEST_CASE("flag tower stages match the closed-form differential") {
  for (auto [m, k] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {5, 1}}) {
    CAPTURE(m);
    CAPTURE(k);
    FlagTower ft = flag_tower(m, k);
    REQUIRE(static_cast<int>(ft.red.stages.size()) == m + 1);
    for (int s = 0; s <= m; ++s) {
      const PureSullivanModel& st = ft.red.stages[s];
      CHECK(st.d.is_differential());
      for (int l = s + 1; l <= m + k; ++l) {
        GcaElement want = expected_stage_dtau(st, m, k, s, l);
        CHECK(st.d.image(st.alg->id_of("tau" + std::to_string(l))) == want);
      }
    }
    CHECK(ft.red.small().is_minimal());
  }
}

namespace {

// all compositions of s with parts of size at most k, tallied by type vector
std::map<std::vector<int>, long long> compositions_by_type(int s, int k) {
  std::map<std::vector<int>, long long> out;
  std::vector<int> type(static_cast<size_t>(k), 0);
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      ++out[type];
      return;
    }
    for (int p = 1; p <= std::min(k, rem); ++p) {
      ++type[p - 1];
      rec(rem - p);
      --type[p - 1];
    }
  };
  rec(s);
  return out;
}

}  // namespace

TEST_CASE("block partition counts") {
  CHECK(block_partition_count(0, {}) == 1);
  CHECK(block_partition_count(1, {1}) == 1);
  CHECK(block_partition_count(3, {1, 1}) == 2);
  CHECK(block_partition_count(4, {2, 1}) == 3);
  for (int s = 1; s <= 6; ++s) {
    std::vector<int> pure(static_cast<size_t>(s), 0);
    pure[0] = s;
    CHECK(block_partition_count(s, pure) == 1);
  }
  CHECK_THROWS_AS(block_partition_count(3, {1}), std::runtime_error);

  SUBCASE("recurrence agrees with direct enumeration") {
    for (int k = 1; k <= 4; ++k)
      for (int s = 1; s <= 8; ++s) {
        auto table = compositions_by_type(s, k);
        for (const auto& [type, count] : table) {
          CAPTURE(s);
          CAPTURE(k);
          CHECK(block_partition_count(s, type) == Integer(count));
        }
      }
  }
  SUBCASE("totals double with each step") {
    for (int s = 1; s <= 8; ++s) {
      auto table = compositions_by_type(s, s);
      long long total = 0;
      for (const auto& [type, count] : table) total += count;
      CHECK(Integer(total) == pow(Integer(2), s - 1));
    }
  }
}

TEST_CASE("class map to a quotient on the base") {
  ModelBuilder b;
  b.add_base("c1", 2);
  b.add_base("c2", 4);
  GenId x3 = b.add_fiber("x3", 3);
  GenId x11 = b.add_fiber("x11", 11);
  GcaElement r1 = pow(b.gen("c1"), 2) - Rational(3) * b.gen("c2");
  GcaElement r2 = pow(b.gen("c1"), 2) * pow(b.gen("c2"), 2) - Rational(4) * pow(b.gen("c2"), 3);
  b.set_dx(x3, r1);
  b.set_dx(x11, r2);
  PureSullivanModel m = b.finish();

  auto H = FiniteGradedAlgebra::begin_presentation({{"c1", 2}, {"c2", 4}});
  GcaAlgebra& P = H.presentation();
  H.finish_quotient({pow(make_gen(P, "c1"), 2) - Rational(3) * make_gen(P, "c2"),
                     pow(make_gen(P, "c1"), 2) * pow(make_gen(P, "c2"), 2) -
                         Rational(4) * pow(make_gen(P, "c2"), 3)});

  KMap k = make_kmap(m, H);
  CHECK(k.check(10));
  CHECK(k.apply(m.d.image(x3)).is_zero());
  CHECK(k.apply(m.d.image(x11)).is_zero());
  CHECK_FALSE(k.apply(pow(make_gen(*m.alg, "c1"), 2)).is_zero());

  SUBCASE("a differential that survives in the target fails the check") {
    ModelBuilder b2;
    b2.add_base("x", 2);
    GenId y = b2.add_fiber("y", 5);
    b2.set_dx(y, pow(b2.gen("x"), 3));
    PureSullivanModel m2 = b2.finish();
    auto H2 = FiniteGradedAlgebra::begin_presentation({{"x", 2}});
    H2.finish_quotient({pow(make_gen(H2.presentation(), "x"), 4)});
    KMap k2 = make_kmap(m2, H2);
    CHECK_FALSE(k2.check(8));
  }
}

#include "joinlink/seifert.hpp"

#include <random>
#include <vector>

#include "common.hpp"

using jl::CongruenceStatus;
using jl::IMat;
using jl::IntPoly;
using jl::SeifertForm;

namespace {

SeifertForm random_congruent_input(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-2, 2);
  IMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return SeifertForm::relaxed(std::move(m));
}

IMat random_unimodular(std::mt19937_64& rng, int n, int ops) {
  IMat u = IMat::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<int> row(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < ops; ++t) {
    int i = row(rng);
    int j = row(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) {
          int c = coeff(rng);
          for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
        }
        break;
      case 1:
        for (int k = 0; k < n; ++k) std::swap(u.at(i, k), u.at(j, k));
        break;
      default:
        for (int k = 0; k < n; ++k) u.at(i, k) = -u.at(i, k);
        break;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("lambda matrix layout and sign convention") {
  CHECK(jl::lambda_matrix(3).entries() == IMat::from_rows({{1, 0}, {-1, 1}}));
  CHECK(jl::lambda_matrix(-3).entries() == IMat::from_rows({{1, -1}, {0, 1}}));
  CHECK(jl::lambda_matrix(2).entries() == IMat::from_rows({{1}}));
  CHECK(jl::lambda_matrix(5).entries() ==
        IMat::from_rows({{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}}));
  CHECK(jl::lambda_matrix(1).rank() == 0);
  CHECK(jl::lambda_matrix(-1).rank() == 0);
  CHECK_THROWS_AS(jl::lambda_matrix(0), jl::Error);
  CHECK(jl::lambda_matrix(4).entries().det() == 1);
}

TEST_CASE("Seifert form constructor enforces unimodularity") {
  CHECK_THROWS_AS(SeifertForm(IMat::from_rows({{2}})), jl::Error);
  CHECK_NOTHROW(SeifertForm(IMat::from_rows({{0, 1}, {1, 2}})));
  SeifertForm relaxed = SeifertForm::relaxed(IMat::from_rows({{2}}));
  CHECK(!relaxed.unimodular_checked());
  CHECK_THROWS_AS(SeifertForm(IMat(2, 3)), jl::Error);
  CHECK(SeifertForm(IMat(0, 0)).rank() == 0);
}

TEST_CASE("Brieskorn forms reproduce the sign table") {
  CHECK(jl::brieskorn_form({2, 3}).entries() == IMat::from_rows({{-1, 0}, {1, -1}}));
  CHECK(jl::brieskorn_form({2, 2}).entries() == IMat::from_rows({{-1}}));
  CHECK(jl::brieskorn_form({2, 2, 2}).entries() == IMat::from_rows({{1}}));
  CHECK(jl::brieskorn_form({2, 2, 2, 2}).entries() == IMat::from_rows({{1}}));
  CHECK(jl::brieskorn_form({2, 2, 2, 2, 2}).entries() == IMat::from_rows({{-1}}));
  CHECK(jl::brieskorn_form({3, 4}).rank() == 6);
  CHECK(jl::brieskorn_form({4, 4, 4, 4}).rank() == 81);
  CHECK(jl::brieskorn_form({2, 3}).k() == 1);
  CHECK(jl::brieskorn_form({2, 2, 2}).k() == 2);
  CHECK_THROWS_AS(jl::brieskorn_form({2, 1}), jl::Error);
  CHECK_THROWS_AS(jl::brieskorn_form({0}), jl::Error);
}

TEST_CASE("join tensor sign and metadata") {
  SeifertForm l1(IMat::from_rows({{0, -1}, {-1, 2}}), 1);
  // One-term quadratic tails carry the 1x1 form with the alternating sign.
  for (int m = 2; m <= 5; ++m) {
    long sign = ((m * (m - 1) / 2) % 2) ? -1 : 1;
    SeifertForm l2(IMat::from_rows({{sign}}), m - 1);
    SeifertForm joined = jl::join_tensor(l1, 2, l2, m);
    IMat want = l1.entries();
    if (sign < 0) want = -want;
    CHECK(joined.entries() == want);
    CHECK(joined.k() == 1 + (m - 1) + 1);
  }

  SeifertForm empty{IMat(0, 0)};
  CHECK(jl::join_tensor(empty, 1, l1, 2).rank() == 0);

  // lambda'_2 joined with itself: sign (-1)^{1*1}.
  SeifertForm h = jl::lambda_matrix(2);
  CHECK(jl::join_tensor(h, 1, h, 1).entries() == IMat::from_rows({{-1}}));
  CHECK(jl::join_tensor(h, 1, h, 1).k() == 1);

  // Brieskorn join equals the flat Brieskorn form of the concatenation.
  CHECK(jl::join_tensor(jl::brieskorn_form({2, 3}), 2, jl::brieskorn_form({3, 2}), 2)
            .entries() == jl::brieskorn_form({2, 3, 3, 2}).entries());
  CHECK(jl::join_tensor(jl::brieskorn_form({2, 2}), 2, jl::brieskorn_form({2, 3}), 2)
            .entries() == jl::brieskorn_form({2, 2, 2, 3}).entries());
}

TEST_CASE("extension borders the matrix") {
  SeifertForm l(IMat::from_rows({{0, 1}, {1, 2}}));
  SeifertForm e = jl::extend_form(l, {mpz_class(0), mpz_class(0)}, 1);
  CHECK(e.entries() == IMat::from_rows({{0, 1, 0}, {1, 2, 0}, {0, 0, 1}}));

  CHECK(jl::extend_form(SeifertForm(IMat(0, 0)), {}, -1).entries() ==
        IMat::from_rows({{-1}}));
  CHECK(jl::extend_form(SeifertForm(IMat::from_rows({{1}})), {mpz_class(5)}, 1).entries() ==
        IMat::from_rows({{1, 0}, {5, 1}}));
  CHECK_THROWS_AS(jl::extend_form(l, {mpz_class(0)}, 1), jl::Error);
  CHECK_THROWS_AS(jl::extend_form(l, {mpz_class(0), mpz_class(0)}, 2), jl::Error);

  // |det| preserved for arbitrary borders.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 50; ++t) {
    SeifertForm base = random_congruent_input(rng, 3);
    std::vector<mpz_class> b{mpz_class(d(rng)), mpz_class(d(rng)), mpz_class(d(rng))};
    SeifertForm ext = jl::extend_form(base, b, (t % 2) ? 1 : -1);
    CHECK(abs(ext.entries().det()) == abs(base.entries().det()));
  }
}

TEST_CASE("congruence invariants on anchors") {
  jl::CongruenceInvariants i1 = jl::congruence_invariants(
      SeifertForm(IMat::from_rows({{-1, 0}, {1, -1}})));
  CHECK(i1.alexander == IntPoly::from_longs({1, -1, 1}));

  jl::CongruenceInvariants i2 = jl::congruence_invariants(SeifertForm(IMat::from_rows({{1}})));
  CHECK(i2.det == 1);
  CHECK(i2.smith == std::vector<mpz_class>{1});
  CHECK(i2.symmetrized.signature() == 1);
  CHECK(i2.alexander == IntPoly::from_longs({-1, 1}));

  jl::CongruenceInvariants i3 = jl::congruence_invariants(
      SeifertForm(IMat::from_rows({{0, -1}, {-1, 2}})));
  CHECK(i3.det == -1);
  CHECK(i3.symmetrized.signature() == 0);
  CHECK(i3.symmetrized.rank() == 2);
}

TEST_CASE("congruence invariants are invariant under congruence") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    SeifertForm a = random_congruent_input(rng, n);
    IMat u = random_unimodular(rng, n, 6);
    SeifertForm b = SeifertForm::relaxed(u * a.entries() * u.transpose());
    CHECK(jl::congruence_invariants(a) == jl::congruence_invariants(b));
  }
}

TEST_CASE("monodromy polynomial anchors") {
  CHECK(jl::monodromy_charpoly(SeifertForm(IMat::from_rows({{-1, 0}, {1, -1}}))) ==
        IntPoly::from_longs({1, -1, 1}));
  CHECK(jl::monodromy_charpoly(SeifertForm(IMat::from_rows({{1, 1}, {0, -1}}))) ==
        IntPoly::from_longs({1, -3, 1}));
  CHECK(jl::monodromy_charpoly(SeifertForm(IMat(0, 0))) == IntPoly::from_longs({1}));
  CHECK(jl::monodromy_charpoly(SeifertForm(IMat::from_rows({{-1}}))) ==
        IntPoly::from_longs({1, -1}));
  CHECK_THROWS_AS(jl::monodromy_charpoly(SeifertForm::relaxed(IMat::from_rows({{2}}))),
                  jl::Error);
}

TEST_CASE("monodromy polynomial properties") {
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 60) {
    int n = 1 + static_cast<int>(rng() % 4);
    IMat m = random_unimodular(rng, n, 8);
    mpz_class d = m.det();
    if (d != 1 && d != -1) continue;
    ++done;
    SeifertForm l = SeifertForm(m);
    IntPoly p = jl::monodromy_charpoly(l);
    CHECK(p.degree() == n);
    CHECK(p.constant_term() == 1);
    // Alternate convention is conjugate: identical polynomial.
    CHECK(jl::monodromy_charpoly(l, true) == p);
    // Congruence changes the monodromy only by similarity.
    IMat u = random_unimodular(rng, n, 6);
    CHECK(jl::monodromy_charpoly(SeifertForm(u * m * u.transpose())) == p);
  }
}

TEST_CASE("congruence search finds explicit witnesses") {
  SeifertForm a(IMat::from_rows({{0, -1}, {-1, 2}}));
  SeifertForm b(IMat::from_rows({{0, 1}, {1, 2}}));
  jl::CongruenceVerdict v = jl::check_congruent(a, b);
  REQUIRE(v.status == CongruenceStatus::CongruentWitness);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness * a.entries() * v.witness->transpose() == b.entries());
  mpz_class du = v.witness->det();
  CHECK((du == 1 || du == -1));

  jl::CongruenceVerdict same = jl::check_congruent(a, a);
  CHECK(same.status == CongruenceStatus::CongruentWitness);
  CHECK(*same.witness == IMat::identity(2));
}

TEST_CASE("congruence search resolves the bordered three by three pair") {
  SeifertForm a(IMat::from_rows({{0, 1, 0}, {1, 2, 0}, {0, 0, 1}}));
  SeifertForm b(IMat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  jl::CongruenceVerdict v = jl::check_congruent(a, b);
  REQUIRE(v.status == CongruenceStatus::CongruentWitness);
  CHECK(*v.witness * a.entries() * v.witness->transpose() == b.entries());
}

TEST_CASE("congruence search separates by invariants") {
  jl::CongruenceVerdict v =
      jl::check_congruent(SeifertForm(IMat::from_rows({{1}})),
                          SeifertForm(IMat::from_rows({{-1}})));
  CHECK(v.status == CongruenceStatus::DistinguishedByInvariant);
  REQUIRE(v.separating.has_value());
  CHECK(v.separating->name == "determinant");
  CHECK(v.separating->value_a == "1");
  CHECK(v.separating->value_b == "-1");

  jl::CongruenceVerdict vr = jl::check_congruent(SeifertForm(IMat::identity(2)),
                                                 SeifertForm(IMat::identity(3)));
  CHECK(vr.status == CongruenceStatus::DistinguishedByInvariant);
  CHECK(vr.separating->name == "rank");
}

TEST_CASE("congruence search reports Unknown on an invariant-tied pair") {
  // Even versus odd lattice of equal determinant, Smith form, inertia, and
  // Alexander polynomial; no congruence exists but no invariant here sees it.
  SeifertForm a = SeifertForm::relaxed(IMat::from_rows({{2, 1}, {1, 2}}));
  SeifertForm b = SeifertForm::relaxed(IMat::from_rows({{1, 0}, {0, 3}}));
  CHECK(jl::congruence_invariants(a) == jl::congruence_invariants(b));
  jl::CongruenceVerdict v = jl::check_congruent(a, b);
  CHECK(v.status == CongruenceStatus::Unknown);
}

TEST_CASE("congruence search round trips random conjugations") {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    SeifertForm a = random_congruent_input(rng, n);
    IMat u = random_unimodular(rng, n, 3);
    SeifertForm b = SeifertForm::relaxed(u * a.entries() * u.transpose());
    jl::CongruenceVerdict v = jl::check_congruent(a, b);
    REQUIRE(v.status == CongruenceStatus::CongruentWitness);
    CHECK(*v.witness * a.entries() * v.witness->transpose() == b.entries());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modq/catalog.hpp"
#include "modq/degeneration.hpp"

using namespace modq;

namespace {

Label L(int i) { return Label(std::to_string(i)); }

}  // namespace

TEST_CASE("structural tensor shape and congruence") {
  Tensor t2 = structural_tensor(2);
  CHECK(t2.size() == 4);
  CHECK(t2.find({L(0), L(0), L(0)}) != nullptr);
  CHECK(t2.find({L(0), L(1), L(1)}) != nullptr);
  CHECK(t2.find({L(1), L(0), L(1)}) != nullptr);
  CHECK(t2.find({L(1), L(1), L(0)}) != nullptr);

  for (int q = 2; q <= 9; ++q) {
    CHECK(structural_tensor(q).size() == static_cast<std::size_t>(q) * q);
    Tensor shifted = structural_tensor(q, 1);
    for (const auto& [key, _] : shifted.terms()) {
      int sum = std::stoi(key[0].str()) + std::stoi(key[1].str()) + std::stoi(key[2].str());
      CHECK(sum % q == ((q - 1) % q));  // i+j+k = -1 mod q
    }
  }
}

TEST_CASE("matmul tensor shapes") {
  CHECK(matmul_tensor(1, 1, 1).size() == 1);
  Tensor mm = matmul_tensor(2, 2, 2);
  CHECK(mm.size() == 8);
  CHECK(mm.x().size() == 4);
  CHECK(mm.y().size() == 4);
  CHECK(mm.z().size() == 4);
  CHECK(matmul_tensor(2, 1, 2).size() == 4);
}

TEST_CASE("cw tensor terms") {
  CHECK(cw_tensor(2).size() == 9);
  // CW_1 from the rotated definition, all six terms explicit.
  Tensor cw1 = cw_tensor(1);
  REQUIRE(cw1.size() == 6);
  CHECK(cw1.find({L(0), L(0), L(2)}) != nullptr);
  CHECK(cw1.find({L(0), L(2), L(0)}) != nullptr);
  CHECK(cw1.find({L(2), L(0), L(0)}) != nullptr);
  CHECK(cw1.find({L(0), L(1), L(1)}) != nullptr);
  CHECK(cw1.find({L(1), L(0), L(1)}) != nullptr);
  CHECK(cw1.find({L(1), L(1), L(0)}) != nullptr);
  for (int q = 1; q <= 8; ++q) {
    CHECK(cw_tensor(q, true).size() == static_cast<std::size_t>(3 * q + 3));
    CHECK(cw_tensor(q, false).size() == static_cast<std::size_t>(3 * q + 3));
  }
}

TEST_CASE("strassen tensor terms") {
  Tensor s1 = strassen_tensor(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1.find({L(0), L(1), L(1)}) != nullptr);
  CHECK(s1.find({L(1), L(0), L(1)}) != nullptr);
  CHECK(strassen_tensor(2).size() == 4);
  for (int q = 1; q <= 8; ++q)
    CHECK(strassen_tensor(q).size() == static_cast<std::size_t>(2 * q));
}

TEST_CASE("rank expression over roots of unity expands to T_p") {
  for (int p : {2, 3, 4, 5, 6, 7}) {
    RankExpression r = rank_expression_Tp(p, TpRing::Cyclotomic);
    CHECK(r.rank() == static_cast<std::size_t>(p));
    Expansion e = expand_rank_expression(r);
    CHECK(e.tensor == structural_tensor(p, 0, Ring::cyclotomic(p)));
    CHECK_FALSE(e.h.has_value());
  }
}

TEST_CASE("rank expression coefficients match the root-of-unity sums") {
  // Coefficient of x_0 y_0 z_0 is (1/3)(1+1+1) = 1; of x_0 y_0 z_1 it is
  // (1/3)(1 + zeta + zeta^2) = 0.
  Expansion e = expand_rank_expression(rank_expression_Tp(3, TpRing::Cyclotomic));
  const Scalar* diag = e.tensor.find({L(0), L(0), L(0)});
  REQUIRE(diag != nullptr);
  CHECK(*diag == Scalar::one(Ring::cyclotomic(3)));
  CHECK(e.tensor.find({L(0), L(0), L(1)}) == nullptr);
}

TEST_CASE("rank expression over GF(p+1) expands to T_p") {
  for (int p : {2, 4, 6, 10}) {
    RankExpression r = rank_expression_Tp(p, TpRing::PrimeField);
    CHECK(r.rank() == static_cast<std::size_t>(p));
    Expansion e = expand_rank_expression(r);
    CHECK(e.tensor == structural_tensor(p, 0, Ring::prime_field(p + 1)));
  }
  // p+1 composite is rejected: 3+1 = 4.
  CHECK_THROWS_AS(rank_expression_Tp(3, TpRing::PrimeField), NotPrimeError);
}

TEST_CASE("rank expression for the relabeled structural tensor") {
  for (int p : {3, 4}) {
    Expansion e = expand_rank_expression(rank_expression_Tp(p, TpRing::Cyclotomic, 1));
    CHECK(e.tensor == structural_tensor(p, 1, Ring::cyclotomic(p)));
  }
}

TEST_CASE("expand of a single rank-one factor") {
  RankExpression r;
  r.ring = Ring::rational();
  r.x = VarSet("X", {L(0), L(1)});
  r.y = VarSet("Y", {L(0)});
  r.z = VarSet("Z", {L(0)});
  RankExpression::Factor f;
  f.x = {Scalar::rational(1), Scalar::rational(0)};
  f.y = {Scalar::rational(1)};
  f.z = {Scalar::rational(1)};
  r.factors.push_back(f);
  Expansion e = expand_rank_expression(r);
  CHECK(e.tensor.size() == 1);
  CHECK(e.tensor.find({L(0), L(0), L(0)}) != nullptr);
}

TEST_CASE("cw family weights are the printed ones and verify") {
  NamedDegeneration cw2 = named_degeneration("cw", 2);
  CHECK(cw2.degeneration.a.at(L(0)) == 0);
  CHECK(cw2.degeneration.a.at(L(1)) == 1);
  CHECK(cw2.degeneration.a.at(L(2)) == 1);
  CHECK(cw2.degeneration.a.at(L(3)) == 2);
  CHECK(cw2.degeneration.b == cw2.degeneration.a);
  CHECK(cw2.degeneration.c.at(L(0)) == -2);
  CHECK(cw2.degeneration.c.at(L(1)) == -1);
  CHECK(cw2.degeneration.c.at(L(2)) == -1);
  CHECK(cw2.degeneration.c.at(L(3)) == 0);
  CHECK(verify_degeneration(cw2.degeneration).valid);
}

TEST_CASE("cw q=1 kept terms are exactly CW_1") {
  NamedDegeneration cw1 = named_degeneration("cw", 1);
  DegenerationReport report = verify_degeneration(cw1.degeneration);
  CHECK(report.valid);
  CHECK(cw1.degeneration.small == cw_tensor(1));
  // Weight sums over the big tensor stay within the case analysis range.
  for (const auto& [key, _] : cw1.degeneration.big.terms()) {
    long long sum = cw1.degeneration.a.at(key[0]) + cw1.degeneration.b.at(key[1]) +
                    cw1.degeneration.c.at(key[2]);
    CHECK(sum >= 0);
    CHECK(sum <= 3);
  }
}

TEST_CASE("corrected strassen weights verify, printed ones do not") {
  for (int q = 1; q <= 4; ++q) {
    NamedDegeneration good = named_degeneration("strassen", q);
    CHECK(good.expected_valid);
    CHECK(verify_degeneration(good.degeneration).valid);
    CHECK(good.degeneration.small.size() == static_cast<std::size_t>(2 * q));

    NamedDegeneration printed = named_degeneration("strassen-as-printed", q);
    CHECK_FALSE(printed.expected_valid);
    CHECK_FALSE(verify_degeneration(printed.degeneration).valid);
  }
}

TEST_CASE("corrected strassen small tensor is the relabeled S_q") {
  // The z-index q-i convention is S_q with z_k renamed to z_{k-1 mod q+1}.
  for (int q = 1; q <= 4; ++q) {
    Tensor paper = strassen_tensor(q);
    std::map<Label, Label> fz;
    for (int k = 0; k <= q; ++k) fz[L(k)] = L((k - 1 + (q + 1)) % (q + 1));
    Tensor relabeled = paper.relabel({}, {}, fz);
    // Compare term sets; the relabeled variable order differs.
    NamedDegeneration good = named_degeneration("strassen", q);
    REQUIRE(relabeled.size() == good.degeneration.small.size());
    for (const auto& [key, _] : relabeled.terms())
      CHECK(good.degeneration.small.find(key) != nullptr);
  }
}

TEST_CASE("catalog names parse") {
  CHECK(catalog_tensor("T4").size() == 16);
  CHECK(catalog_tensor("T4", 1) == structural_tensor(4, 1));
  CHECK(catalog_tensor("CW2").size() == 9);
  CHECK(catalog_tensor("C2").size() == 9);
  CHECK(catalog_tensor("S3").size() == 6);
  CHECK(catalog_tensor("MM(2,2,2)").size() == 8);
  CHECK_THROWS_AS(catalog_tensor("XYZ"), InvalidArgumentError);
}

TEST_CASE("named_degenerations covers all families up to the requested q") {
  auto all = named_degenerations(3);
  CHECK(all.size() == 9);
  for (const auto& nd : all)
    CHECK(verify_degeneration(nd.degeneration).valid == nd.expected_valid);
}

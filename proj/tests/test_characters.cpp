#include "oracles.hpp"
#include "transvect/characters.hpp"

#include <doctest.h>

using namespace transvect;

TEST_CASE("plethysm weights against brute force") {
  for (int r = 1; r <= 4; ++r) {
    for (int d = 0; d <= 6; ++d) {
      auto w = plethysm_weights(r, d);
      auto ref = oracle::plethysm_brute(r, d);
      CHECK(w == WeightVector(ref.begin(), ref.end()));
      Integer mass = 0;
      for (const auto& [m, k] : w) {
        mass += k;
      }
      CHECK(mass == oracle::choose(d + r, r));
    }
  }
  WeightVector s2s2{{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}};
  CHECK(plethysm_weights(2, 2) == s2s2);
}

TEST_CASE("decompose") {
  IrrDecomp s2s2 = decompose(plethysm_weights(2, 2));
  CHECK(s2s2 == IrrDecomp{{4, 1}, {0, 1}});
  for (int r = 1; r <= 4; ++r) {
    for (int d = 1; d <= 8; ++d) {
      auto w = plethysm_weights(r, d);
      CHECK(character_of(decompose(w)) == w);
    }
  }
  auto s3s8 = decompose(plethysm_weights(3, 8));
  CHECK(s3s8.at(24) == 1);
  CHECK(s3s8.at(18) == 1);
  CHECK(dimension(s3s8) == 165);
  CHECK_THROWS_AS(decompose(WeightVector{{2, 1}}), std::domain_error);
  CHECK_THROWS_AS(decompose(WeightVector{{0, -1}}), std::domain_error);
}

TEST_CASE("ox and ideal characters") {
  CHECK(ox_char(2, 1) == IrrDecomp{{4, 1}, {0, 1}});
  CHECK(ox_char(3, 2) == IrrDecomp{{12, 1}, {8, 1}, {4, 1}, {0, 1}});
  CHECK(to_string(ideal_char(3, 8)) == "S18 S14 S12 S10 S8 S6");
  for (int d = 2; d <= 10; d += 2) {
    CHECK(ideal_char(2, d).empty());
  }
  for (int r = 2; r <= 4; ++r) {
    for (int d = 2; d <= 10; d += 2) {
      auto ideal = ideal_char(r, d);
      for (const auto& [m, k] : ideal) {
        CHECK(k > 0);
      }
      CHECK(dimension(ideal) + dimension(ox_char(r, d / 2)) == dimension(decompose(plethysm_weights(r, d))));
    }
  }
  CHECK_THROWS_AS(ideal_char(1, 4), std::domain_error);
  CHECK_THROWS(ideal_char(3, 5));
  CHECK(to_string(IrrDecomp{{12, 2}, {4, 1}}) == "2S12 S4");
}

TEST_CASE("schur dimensions") {
  CHECK(schur_dim(Partition{2, 2, 2}, 3) == 1);
  CHECK(schur_dim(Partition{1, 1}, 3) == 3);
  for (int d = 0; d <= 6; ++d) {
    CHECK(schur_dim(Partition{d}, 3) == oracle::choose(d + 2, 2));
  }
  for (auto lambda : std::vector<std::vector<int>>{{3, 1}, {2, 2}, {4, 2, 1}, {2, 1, 1}, {5}, {3, 3, 2}}) {
    for (int n = 1; n <= 4; ++n) {
      CHECK(schur_dim(Partition(lambda), n) == oracle::ssyt_count(lambda, n));
    }
  }
  CHECK(Partition{3, 1, 0}.to_string() == "(3,1)");
  CHECK_THROWS(Partition{1, 2});
  CHECK_THROWS(Partition{-1});
}

TEST_CASE("ternary quartic dimension identity") {
  auto rep = ternary_dim_report();
  CHECK(rep.plethysm == 680);
  CHECK(rep.ox_part == 406);
  CHECK(rep.ideal_part == 274);
  CHECK(rep.pass());
  CHECK(ternary_dim_check());
}

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tropmono/errors.hpp"
#include "tropmono/sampling.hpp"
#include "tropmono/structure.hpp"

namespace tropmono {

  TEST(Sampling, SameSeedSameStream) {
    for (auto p : {Profile::dense_rational, Profile::with_neginf,
                   Profile::boundary, Profile::mixed}) {
      Rng r1(99), r2(99), r3(100);
      bool differs = false;
      for (int s = 0; s < 200; ++s) {
        auto const a = sample_matrix(r1, p);
        EXPECT_EQ(a, sample_matrix(r2, p));
        differs = differs || a != sample_matrix(r3, p);
      }
      EXPECT_TRUE(differs);
    }
  }

  // Pins the stream so that seeds stay reproducible across builds.
  TEST(Sampling, FrozenStream) {
    Rng rng(42);
    EXPECT_EQ(to_json_string(sample_matrix(rng, Profile::dense_rational)),
              R"([["-6","-4"],["-6","-1"]])");
    EXPECT_EQ(to_json_string(sample_matrix(rng, Profile::boundary)), R"([["0","-2"],["-inf","1"]])");
  }

  TEST(Sampling, WithNegInfProducesZeroMatrix) {
    Rng rng(1);
    int zeros = 0, bottoms = 0;
    for (int s = 0; s < 10000; ++s) {
      auto const a = sample_matrix(rng, Profile::with_neginf);
      zeros += a.is_zero();
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          bottoms += a(i, j).is_bottom();
        }
      }
    }
    EXPECT_GT(zeros, 0);
    // about one entry in four
    EXPECT_GT(bottoms, 9000);
    EXPECT_LT(bottoms, 11000);
  }

  TEST(Sampling, BoundaryHitsEveryIdempotentFamily) {
    Rng                           rng(2);
    std::set<IdempotentForm::Kind> seen;
    for (int s = 0; s < 10000; ++s) {
      auto const a = sample_matrix(rng, Profile::boundary);
      if (is_idempotent(a)) {
        seen.insert(idempotent_form(a).kind);
      }
    }
    EXPECT_EQ(seen.size(), 4u);
  }

  TEST(Sampling, MixedCoversDegenerateShapes) {
    Rng rng(3);
    int zero = 0, zero_row = 0, zero_col = 0;
    for (int s = 0; s < 4000; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      zero += a.is_zero();
      zero_row += !a.is_zero() && (a.row(0).is_zero() || a.row(1).is_zero());
      zero_col += !a.is_zero() && (a.column(0).is_zero() || a.column(1).is_zero());
    }
    EXPECT_GT(zero, 100);
    EXPECT_GT(zero_row, 300);
    EXPECT_GT(zero_col, 300);
  }

  TEST(Sampling, IsometricCopies) {
    Rng rng(4);
    for (int s = 0; s < 2000; ++s) {
      auto const m = sample_closed_set(rng);
      EXPECT_TRUE(isometric(m, sample_isometric_copy(rng, m)));
    }
  }

  TEST(Sampling, ProfileNames) {
    for (auto p : {Profile::dense_rational, Profile::with_neginf,
                   Profile::boundary, Profile::mixed}) {
      EXPECT_EQ(parse_profile(to_string(p)), p);
    }
    EXPECT_THROW(parse_profile("uniform"), ParseError);
  }

}  // namespace tropmono

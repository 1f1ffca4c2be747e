#include <gtest/gtest.h>

#include <tuple>

#include "support.hpp"
#include "tropmono/errors.hpp"
#include "tropmono/green.hpp"
#include "tropmono/sampling.hpp"

namespace tropmono {
  namespace {
    using test::mat;
    using test::q;
    using test::set;
    using Kind = RClassForm::Kind;

    TropScalar const NEG = TropScalar::bottom();

    using Shape = std::tuple<Kind, std::optional<Rational>, std::optional<Rational>>;

    // Reads the R-class straight off the entry pattern of the matrix, one
    // branch per row of the table of R-classes (both column orders).
    Shape table_lookup(TropMatrix const& m) {
      auto fin = [&](std::size_t i, std::size_t j) { return m(i, j).is_finite(); };
      auto v   = [&](std::size_t i, std::size_t j) { return m(i, j).value(); };
      auto diff = [&](std::size_t j) { return Rational(v(1, j) - v(0, j)); };
      int const pattern = fin(0, 0) * 8 + fin(0, 1) * 4 + fin(1, 0) * 2 + fin(1, 1);
      switch (pattern) {
        case 0b0000:
          return {Kind::zero, {}, {}};
        case 0b1000:
        case 0b0100:
        case 0b1100:
          return {Kind::singleton_neg_inf, {}, {}};
        case 0b0010:
        case 0b0001:
        case 0b0011:
          return {Kind::singleton_pos_inf, {}, {}};
        case 0b1010:
          return {Kind::singleton_finite, {}, diff(0)};
        case 0b0101:
          return {Kind::singleton_finite, {}, diff(1)};
        case 0b1001:
        case 0b0110:
          return {Kind::full_line, {}, {}};
        case 0b1101:
          return {Kind::half_low, {}, diff(1)};
        case 0b1110:
          return {Kind::half_low, {}, diff(0)};
        case 0b0111:
          return {Kind::half_high, {}, diff(1)};
        case 0b1011:
          return {Kind::half_high, {}, diff(0)};
        default: {
          Rational const d0 = diff(0), d1 = diff(1);
          if (d0 == d1) {
            return {Kind::singleton_finite, {}, d0};
          }
          return {Kind::finite_interval, std::min(d0, d1), std::max(d0, d1)};
        }
      }
    }

    std::vector<TropMatrix> grid_matrices() {
      return test::all_matrices({NEG, -1L, 0L, q(3, 2)});
    }
  }  // namespace

  TEST(RClass, MatchesEntryPatternTable) {
    for (auto const& a : grid_matrices()) {
      RClassForm const form = r_class_of(a);
      EXPECT_EQ(Shape(form.kind(), form.x(), form.y()), table_lookup(a))
          << to_json_string(a);
      EXPECT_EQ(form.set(), proj_column_space(a));
      RClassForm const lform = l_class_of(a);
      EXPECT_EQ(Shape(lform.kind(), lform.x(), lform.y()),
                table_lookup(transpose(a)));
    }
  }

  TEST(RClass, Examples) {
    EXPECT_EQ(r_class_of(mat(R"([["1","-inf"],["-inf","-inf"]])")).kind(),
              Kind::singleton_neg_inf);
    EXPECT_EQ(r_class_of(TropMatrix::zero(2)).kind(), Kind::zero);
    EXPECT_EQ(r_class_of(mat(R"([["0","-inf"],["-inf","5"]])")).kind(),
              Kind::full_line);
    EXPECT_EQ(to_string(r_class_of(mat(R"([["0","0"],["1","2"]])")).kind()),
              "interval");
  }

  TEST(RClass, SameFormIffRRelated) {
    Rng rng(31);
    for (int s = 0; s < 3000; ++s) {
      auto const a = sample_matrix(rng, Profile::boundary);
      auto const b = sample_matrix(rng, Profile::boundary);
      EXPECT_EQ(r_class_of(a) == r_class_of(b), related(GreenRelation::R, a, b));
      EXPECT_EQ(l_class_of(a) == l_class_of(b), related(GreenRelation::L, a, b));
    }
  }

  TEST(Preorders, Examples) {
    auto const a = mat(R"([["0","0"],["1","2"]])");
    auto const b = mat(R"([["0","0"],["0","3"]])");
    EXPECT_TRUE(leq_R(a, b));
    EXPECT_FALSE(leq_R(b, a));
    EXPECT_TRUE(leq_L(transpose(a), transpose(b)));
    Rng rng(32);
    for (int s = 0; s < 200; ++s) {
      auto const x = sample_matrix(rng, Profile::mixed);
      EXPECT_TRUE(leq_R(TropMatrix::zero(2), x));
      EXPECT_TRUE(leq_L(x, TropMatrix::identity(2)));
      EXPECT_TRUE(leq_J(x, TropMatrix::identity(2)));
      if (!is_monomial(x)) {
        EXPECT_FALSE(leq_R(TropMatrix::identity(2), x));
      }
    }
    // PC [0,1] into PC [5,7]
    EXPECT_TRUE(leq_J(mat(R"([["0","0"],["0","1"]])"),
                      mat(R"([["0","0"],["5","7"]])")));
    // PC [0,+inf] into PC [0,9]
    EXPECT_FALSE(leq_J(mat(R"([["0","-inf"],["0","0"]])"),
                       mat(R"([["0","0"],["0","9"]])")));
  }

  TEST(Preorders, AgreeWithResiduationOnGrid) {
    auto const ms = grid_matrices();
    for (auto const& a : ms) {
      for (auto const& b : ms) {
        ASSERT_EQ(leq_R(a, b), solves_right(b, a))
            << to_json_string(a) << " " << to_json_string(b);
        ASSERT_EQ(leq_L(a, b), solves_right(transpose(b), transpose(a)));
      }
    }
  }

  TEST(Preorders, LeftIsTransposeOfRight) {
    Rng rng(33);
    for (int s = 0; s < 2000; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      auto const b = sample_matrix(rng, Profile::mixed);
      EXPECT_EQ(leq_L(a, b), leq_R(transpose(a), transpose(b)));
    }
  }

  TEST(Preorders, MonotoneClosure) {
    Rng rng(34);
    for (int s = 0; s < 2000; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      auto const x = sample_matrix(rng, Profile::mixed);
      auto const y = sample_matrix(rng, Profile::mixed);
      EXPECT_TRUE(leq_R(mat_mul(a, x), a));
      EXPECT_TRUE(leq_L(mat_mul(x, a), a));
      EXPECT_TRUE(leq_J(mat_mul(mat_mul(x, a), y), a));
    }
  }

  TEST(Related, Examples) {
    auto const a = mat(R"([["0","0"],["1","2"]])");
    EXPECT_TRUE(related(GreenRelation::R, a, mat(R"([["3","3"],["4","5"]])")));
    auto const c = mat(R"([["0","0"],["0","1"]])");
    auto const d = mat(R"([["0","0"],["5","6"]])");
    EXPECT_TRUE(related(GreenRelation::J, c, d));
    EXPECT_TRUE(related(GreenRelation::D, c, d));
    EXPECT_FALSE(related(GreenRelation::R, c, d));
    EXPECT_TRUE(related(GreenRelation::L, c, d));
    EXPECT_FALSE(related(GreenRelation::H, c, d));
    EXPECT_THROW(related(GreenRelation::R, TropMatrix(3), TropMatrix(3)),
                 DomainError);
  }

  TEST(Related, DEqualsJAndHIsMeet) {
    Rng rng(35);
    for (int s = 0; s < 3000; ++s) {
      auto const a = sample_matrix(rng, Profile::boundary);
      auto const b = sample_matrix(rng, Profile::boundary);
      bool const r = related(GreenRelation::R, a, b);
      bool const l = related(GreenRelation::L, a, b);
      EXPECT_EQ(related(GreenRelation::D, a, b), related(GreenRelation::J, a, b));
      EXPECT_EQ(related(GreenRelation::H, a, b), r && l);
      EXPECT_EQ(r, leq_R(a, b) && leq_R(b, a));
      if (r || l) {
        EXPECT_TRUE(related(GreenRelation::D, a, b));
      }
    }
  }

  TEST(Relation, TextRoundTrip) {
    for (auto rel : {GreenRelation::R, GreenRelation::L, GreenRelation::H,
                     GreenRelation::D, GreenRelation::J, GreenRelation::leq_R,
                     GreenRelation::leq_L, GreenRelation::leq_J}) {
      EXPECT_EQ(parse_relation(to_string(rel)), rel);
    }
    EXPECT_EQ(to_string(GreenRelation::leq_J), "leqJ");
    EXPECT_THROW(parse_relation("X"), ParseError);
  }

  TEST(WitnessZ, Examples) {
    EXPECT_EQ(witness_Z(set("{1}"), set("{-3}")), mat(R"([["0","-3"],["1","-2"]])"));
    EXPECT_EQ(witness_Z(set("{+inf}"), set("{-inf}")),
              mat(R"([["-inf","-inf"],["0","-inf"]])"));
    EXPECT_EQ(witness_Z(set("[1,3]"), set("[10,12]")),
              mat(R"([["0","10"],["1","13"]])"));
    EXPECT_EQ(witness_Z(ClosedConvexSet::empty(), ClosedConvexSet::empty()),
              TropMatrix::zero(2));
    EXPECT_EQ(witness_Z(ClosedConvexSet::full_line(), ClosedConvexSet::full_line()),
              TropMatrix::identity(2));
    EXPECT_THROW(witness_Z(set("[0,1]"), set("[0,2]")), DomainError);
    EXPECT_THROW(witness_Z(set("{0}"), ClosedConvexSet::empty()), DomainError);
  }

  TEST(WitnessZ, AllIsometricPairsOnGrid) {
    std::vector<ProjPoint> const pts
        = {ProjPoint::neg_inf(), -2L, q(-1, 2), 0L, 1L, q(5, 2), 3L,
           ProjPoint::pos_inf()};
    auto const sets  = test::all_sets(pts);
    int        pairs = 0;
    for (auto const& m : sets) {
      for (auto const& n : sets) {
        if (!isometric(m, n)) {
          EXPECT_THROW(witness_Z(m, n), DomainError);
          continue;
        }
        ++pairs;
        TropMatrix const z = witness_Z(m, n);
        EXPECT_EQ(proj_column_space(z), m) << to_string(m) << " " << to_string(n);
        EXPECT_EQ(proj_row_space(z), n) << to_string(m) << " " << to_string(n);
      }
    }
    EXPECT_GT(pairs, 100);
  }

  TEST(DClassWitness, Examples) {
    auto const a = mat(R"([["0","0"],["0","1"]])");
    auto const b = mat(R"([["0","0"],["5","6"]])");
    TropMatrix const z = d_class_witness(a, b);
    EXPECT_EQ(proj_column_space(z), proj_column_space(b));
    EXPECT_EQ(proj_row_space(z), proj_row_space(a));
    EXPECT_TRUE(related(GreenRelation::R, z, b));
    EXPECT_TRUE(related(GreenRelation::L, z, a));
    EXPECT_EQ(d_class_witness(TropMatrix::zero(2), TropMatrix::zero(2)),
              TropMatrix::zero(2));
    EXPECT_EQ(proj_column_space(d_class_witness(a, a)), proj_column_space(a));
    EXPECT_THROW(d_class_witness(a, TropMatrix::identity(2)), DomainError);
  }

  TEST(JWitness, ProducesVerifiedFactors) {
    Rng rng(36);
    int found = 0;
    for (int s = 0; s < 3000; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      auto const b = sample_matrix(rng, Profile::mixed);
      auto const xy = j_witness(a, b);
      ASSERT_EQ(xy.has_value(), leq_J(a, b));
      if (xy) {
        ++found;
        EXPECT_EQ(mat_mul(mat_mul(xy->first, b), xy->second), a);
      }
    }
    EXPECT_GT(found, 1000);
  }

}  // namespace tropmono

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "support.hpp"
#include "tropmono/errors.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/sampling.hpp"

namespace tropmono {
  namespace {
    using test::mat;
    using test::q;

    TropScalar const NEG = TropScalar::bottom();

    bool leq_residual(TropMatrix const& x, ResidualMatrix const& r) {
      for (std::size_t i = 0; i < x.dim(); ++i) {
        for (std::size_t j = 0; j < x.dim(); ++j) {
          if (ResidualEntry(x(i, j)) > r(i, j)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  TEST(TropMatrix, ProductExamples) {
    TropMatrix const a = mat(R"([["0","1"],["2","3"]])");
    EXPECT_EQ(mat_mul(a, a), mat(R"([["3","4"],["5","6"]])"));
    EXPECT_EQ(mat_mul(TropMatrix::identity(2), a), a);
    EXPECT_EQ(mat_mul(a, TropMatrix::identity(2)), a);
    EXPECT_EQ(mat_mul(TropMatrix::zero(2), a), TropMatrix::zero(2));
  }

  TEST(TropMatrix, SumExamples) {
    TropMatrix const a = mat(R"([["0","-inf"],["1","2"]])");
    TropMatrix const b = mat(R"([["-1","3"],["0","-inf"]])");
    EXPECT_EQ(mat_add(a, b), mat(R"([["0","3"],["1","2"]])"));
    EXPECT_EQ(mat_add(a, a), a);
    EXPECT_EQ(mat_add(a, TropMatrix::zero(2)), a);
  }

  TEST(TropMatrix, ProductMatchesNaiveOracle) {
    Rng rng(1);
    for (std::size_t n : {1, 2, 3, 4}) {
      for (int s = 0; s < 200; ++s) {
        TropMatrix const a = sample_matrix(rng, Profile::with_neginf, n);
        TropMatrix const b = sample_matrix(rng, Profile::with_neginf, n);
        EXPECT_EQ(mat_mul(a, b), test::naive_product(a, b));
      }
    }
  }

  TEST(TropMatrix, AssociativeAndDistributive) {
    Rng rng(2);
    for (int s = 0; s < 500; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      auto const b = sample_matrix(rng, Profile::mixed);
      auto const c = sample_matrix(rng, Profile::mixed);
      EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
      EXPECT_EQ(mat_mul(a, mat_add(b, c)), mat_add(mat_mul(a, b), mat_mul(a, c)));
      EXPECT_EQ(mat_mul(mat_add(b, c), a), mat_add(mat_mul(b, a), mat_mul(c, a)));
      EXPECT_EQ(transpose(mat_mul(a, b)), mat_mul(transpose(b), transpose(a)));
    }
  }

  TEST(TropMatrix, Transpose) {
    TropMatrix const a = mat(R"([["0","1"],["2","3"]])");
    EXPECT_EQ(transpose(a), mat(R"([["0","2"],["1","3"]])"));
    EXPECT_EQ(transpose(transpose(a)), a);
  }

  TEST(TropMatrix, RejectsNonSquareAndMismatch) {
    EXPECT_THROW(TropMatrix(std::vector<std::vector<TropScalar>>{{1L, 2L}}),
                 DomainError);
    EXPECT_THROW(mat_mul(TropMatrix(2), TropMatrix(3)), DomainError);
    EXPECT_THROW(mat_add(TropMatrix(2), TropMatrix(3)), DomainError);
  }

  TEST(Monomial, Examples) {
    EXPECT_TRUE(is_monomial(TropMatrix::identity(2)));
    EXPECT_TRUE(is_monomial(mat(R"([["-inf","3"],["5","-inf"]])")));
    EXPECT_FALSE(is_monomial(mat(R"([["0","0"],["-inf","0"]])")));
    EXPECT_FALSE(is_monomial(TropMatrix::zero(2)));
  }

  TEST(Monomial, ExhaustivePatternsHaveInverses) {
    std::vector<TropScalar> const grid = {NEG, -2L, 0L, q(3, 2)};
    for (auto const& a : test::all_matrices(grid)) {
      if (!is_monomial(a)) {
        continue;
      }
      EXPECT_TRUE(is_monomial(transpose(a)));
      TropMatrix const b = monomial_inverse(a);
      EXPECT_EQ(mat_mul(a, b), TropMatrix::identity(2));
      EXPECT_EQ(mat_mul(b, a), TropMatrix::identity(2));
    }
    EXPECT_THROW(monomial_inverse(mat(R"([["0","0"],["0","0"]])")),
                 DomainError);
  }

  TEST(MatVec, ActionAndScaling) {
    TropVector const v{2L, 5L};
    EXPECT_EQ(mat_vec(mat(R"([["0","-inf"],["1","0"]])"), v), v);
    EXPECT_EQ(scale(0L, v), v);
    EXPECT_TRUE(scale(NEG, v).is_zero());
    EXPECT_EQ(scale(q(1, 2), v), (TropVector{q(5, 2), q(11, 2)}));
  }

  TEST(Residual, Examples) {
    Rng rng(4);
    for (int s = 0; s < 50; ++s) {
      auto const a = sample_matrix(rng, Profile::with_neginf);
      EXPECT_EQ(left_residual(TropMatrix::identity(2), a), to_residual(a));
    }
    TropMatrix const b = mat(R"([["0","1"],["2","3"]])");
    EXPECT_EQ(mat_mul(b, left_residual(b, b)), to_residual(b));

    TropMatrix const bb = mat(R"([["0","0"],["0","3"]])");
    TropMatrix const aa = mat(R"([["0","0"],["1","2"]])");
    EXPECT_EQ(mat_mul(bb, left_residual(bb, aa)), to_residual(aa));
    EXPECT_TRUE(solves_right(bb, aa));
    EXPECT_FALSE(solves_right(aa, bb));
  }

  TEST(Residual, EntryRule) {
    auto const top = ResidualEntry::top();
    EXPECT_EQ(residuate(ResidualEntry(TropScalar(3L)), NEG), top);
    EXPECT_EQ(residuate(top, 2L), top);
    EXPECT_EQ(residuate(ResidualEntry(NEG), 2L), ResidualEntry(NEG));
    EXPECT_EQ(residuate(ResidualEntry(TropScalar(3L)), 5L),
              ResidualEntry(TropScalar(-2L)));
    EXPECT_EQ(to_string(top), "+inf");
  }

  TEST(Residual, TopOnlyForEmptyColumns) {
    TropMatrix const b = mat(R"([["0","-inf"],["1","-inf"]])");
    ResidualMatrix const r = left_residual(b, mat(R"([["0","0"],["1","2"]])"));
    EXPECT_FALSE(r(0, 0).is_top());
    EXPECT_TRUE(r(1, 0).is_top());
    EXPECT_TRUE(r(1, 1).is_top());
    EXPECT_TRUE(r.has_top());
  }

  // B ⊗ X ≤ A  ⇔  X ≤ B \ A, over a grid of X for sampled (A, B).
  TEST(Residual, GaloisConnection) {
    std::vector<TropScalar> const grid = {NEG, -1L, 0L, 1L};
    auto const                    xs   = test::all_matrices(grid);
    Rng                           rng(5);
    for (int s = 0; s < 120; ++s) {
      auto const a = sample_matrix(rng, Profile::boundary);
      auto const b = sample_matrix(rng, Profile::boundary);
      auto const r = left_residual(b, a);
      for (auto const& x : xs) {
        EXPECT_EQ(entrywise_leq(mat_mul(b, x), a), leq_residual(x, r));
      }
    }
  }

  TEST(Residual, RightResidualIsTransposeDual) {
    Rng rng(6);
    for (int s = 0; s < 300; ++s) {
      auto const a = sample_matrix(rng, Profile::mixed);
      auto const c = sample_matrix(rng, Profile::mixed);
      auto const lhs = right_residual(c, a);
      auto const rhs = left_residual(transpose(a), transpose(c));
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          EXPECT_EQ(lhs(i, j), rhs(j, i));
        }
      }
    }
  }

  // With B, A over {-inf, 0, 1} the greatest solution has entries in
  // {-inf, -1, 0, 1} after materialising, so brute force over that grid
  // decides solvability exactly.
  TEST(SolvesRight, MatchesExhaustiveSearch) {
    std::vector<TropScalar> const small = {NEG, 0L, 1L};
    std::vector<TropScalar> const grid  = {NEG, -1L, 0L, 1L};
    auto const                    xs    = test::all_matrices(grid);
    auto const                    ms    = test::all_matrices(small);
    for (auto const& b : ms) {
      std::set<std::string> reachable;
      for (auto const& x : xs) {
        reachable.insert(to_json_string(test::naive_product(b, x)));
      }
      for (auto const& a : ms) {
        bool const expected = reachable.contains(to_json_string(a));
        ASSERT_EQ(solves_right(b, a), expected)
            << to_json_string(b) << " " << to_json_string(a);
        auto const x = solve_right(b, a);
        ASSERT_EQ(x.has_value(), expected);
        if (x) {
          EXPECT_EQ(mat_mul(b, *x), a);
        }
        auto const y = solve_left(b, a);
        if (y) {
          EXPECT_EQ(mat_mul(*y, b), a);
        }
        EXPECT_EQ(y.has_value(), solves_right(transpose(b), transpose(a)));
      }
    }
  }

  TEST(SolvesRight, Trivial) {
    Rng rng(7);
    for (int s = 0; s < 100; ++s) {
      auto const b = sample_matrix(rng, Profile::mixed);
      EXPECT_TRUE(solves_right(b, b));
      auto const a = sample_matrix(rng, Profile::dense_rational);
      EXPECT_FALSE(solves_right(TropMatrix::zero(2), a));
      EXPECT_TRUE(solves_right(b, mat_mul(b, sample_matrix(rng, Profile::mixed))));
    }
  }

  TEST(SolvesRight, GeneralDimension) {
    Rng rng(8);
    for (int s = 0; s < 100; ++s) {
      auto const b = sample_matrix(rng, Profile::with_neginf, 3);
      auto const x = sample_matrix(rng, Profile::with_neginf, 3);
      auto const a = mat_mul(b, x);
      auto const w = solve_right(b, a);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(mat_mul(b, *w), a);
    }
  }

}  // namespace tropmono

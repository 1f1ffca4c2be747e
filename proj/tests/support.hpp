// Shared helpers and independent oracles for the test binaries.

#ifndef TROPMONO_TESTS_SUPPORT_HPP_
#define TROPMONO_TESTS_SUPPORT_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tropmono/format.hpp"
#include "tropmono/geometry.hpp"
#include "tropmono/ideals.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/scalar.hpp"

namespace tropmono::test {

  inline TropMatrix mat(std::string_view text) {
    return parse_matrix(text);
  }

  inline ClosedConvexSet set(std::string_view text) {
    return parse_set(text);
  }

  inline IdealDescriptor desc(std::string_view text) {
    return parse_descriptor(text);
  }

  inline Rational q(long p, long r = 1) {
    Rational x{mpz_class(p), mpz_class(r)};
    x.canonicalize();
    return x;
  }

  // Naive max-plus over std::optional<Rational>, written without touching
  // the library's scalar operations.
  using Naive = std::optional<Rational>;

  inline Naive naive(TropScalar const& x) {
    return x.is_bottom() ? Naive() : Naive(x.value());
  }

  inline TropScalar lift(Naive const& x) {
    return x ? TropScalar(*x) : TropScalar::bottom();
  }

  inline Naive naive_max(Naive const& a, Naive const& b) {
    if (!a) {
      return b;
    }
    if (!b) {
      return a;
    }
    return *a < *b ? b : a;
  }

  inline Naive naive_plus(Naive const& a, Naive const& b) {
    if (!a || !b) {
      return std::nullopt;
    }
    return Naive(Rational(*a + *b));
  }

  inline TropMatrix naive_product(TropMatrix const& a, TropMatrix const& b) {
    std::size_t const n = a.dim();
    TropMatrix        c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Naive acc;
        for (std::size_t k = 0; k < n; ++k) {
          acc = naive_max(acc, naive_plus(naive(a(i, k)), naive(b(k, j))));
        }
        c(i, j) = lift(acc);
      }
    }
    return c;
  }

  // All 2 x 2 matrices with entries from `grid`.
  inline std::vector<TropMatrix> all_matrices(std::vector<TropScalar> const& grid) {
    std::vector<TropMatrix> out;
    for (auto const& a : grid) {
      for (auto const& b : grid) {
        for (auto const& c : grid) {
          for (auto const& d : grid) {
            out.push_back(TropMatrix{{a, b}, {c, d}});
          }
        }
      }
    }
    return out;
  }

  // Closed convex sets whose endpoints come from `points` (plus the empty
  // set), in no particular order.
  inline std::vector<ClosedConvexSet> all_sets(std::vector<ProjPoint> const& points) {
    std::vector<ClosedConvexSet> out = {ClosedConvexSet::empty()};
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i; j < points.size(); ++j) {
        out.push_back(ClosedConvexSet::hull(points[i], points[j]));
      }
    }
    return out;
  }

}  // namespace tropmono::test

#endif  // TROPMONO_TESTS_SUPPORT_HPP_

// Seeded random generation of matrices, sets and ideal descriptors.
//
// The generator is std::mt19937_64; draws use only its raw output (reduced
// modulo small bounds), so a given seed yields the same stream with every
// standard library.

#ifndef TROPMONO_SAMPLING_HPP_
#define TROPMONO_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "tropmono/geometry.hpp"
#include "tropmono/ideals.hpp"
#include "tropmono/matrix.hpp"

namespace tropmono {

  using Rng = std::mt19937_64;

  inline constexpr std::string_view rng_name = "mt19937_64";

  enum class Profile {
    dense_rational,  // every entry a rational p/q, |p| <= 12, q <= 4
    with_neginf,     // each entry -inf with probability 1/4, else dense
    boundary,        // -inf with probability 1/4, else from {0, ±1/2, ±1, ±2}
    mixed            // one of the above, sometimes with a zeroed row/column
  };

  std::string to_string(Profile p);
  Profile     parse_profile(std::string_view text);

  std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

  Rational   sample_rational(Rng& rng);
  TropScalar sample_scalar(Rng& rng, Profile profile);
  TropMatrix sample_matrix(Rng& rng, Profile profile, std::size_t n = 2);
  // A random monomial (invertible) 2 × 2 matrix.
  TropMatrix sample_unit(Rng& rng);
  ProjPoint  sample_proj_point(Rng& rng);
  // Covers all five isometry types with comparable frequency.
  ClosedConvexSet sample_closed_set(Rng& rng);
  // A uniformly chosen set isometric to `s`, including reflections.
  ClosedConvexSet sample_isometric_copy(Rng& rng, ClosedConvexSet const& s);
  IdealDescriptor sample_descriptor(Rng& rng);

}  // namespace tropmono

#endif  // TROPMONO_SAMPLING_HPP_

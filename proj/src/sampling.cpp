#include "tropmono/sampling.hpp"

#include <array>

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    std::array<Profile, 3> const BASE_PROFILES
        = {Profile::dense_rational, Profile::with_neginf, Profile::boundary};

    Rational sample_width(Rng& rng) {
      // Small grid so that equal widths occur often.
      static std::array<long, 6> const nums = {1, 1, 3, 2, 3, 5};
      static std::array<long, 6> const dens = {2, 1, 2, 1, 1, 2};
      auto const i = uniform_below(rng, nums.size());
      return Rational(nums[i], dens[i]);
    }
  }  // namespace

  std::string to_string(Profile p) {
    switch (p) {
      case Profile::dense_rational:
        return "dense-rational";
      case Profile::with_neginf:
        return "with-neginf";
      case Profile::boundary:
        return "boundary";
      default:
        return "mixed";
    }
  }

  Profile parse_profile(std::string_view text) {
    for (auto p : {Profile::dense_rational,
                   Profile::with_neginf,
                   Profile::boundary,
                   Profile::mixed}) {
      if (text == to_string(p)) {
        return p;
      }
    }
    throw ParseError(
        "expected one of dense-rational, with-neginf, boundary, mixed", 0);
  }

  std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    return rng() % bound;
  }

  Rational sample_rational(Rng& rng) {
    long const num = static_cast<long>(uniform_below(rng, 25)) - 12;
    long const den = static_cast<long>(uniform_below(rng, 4)) + 1;
    Rational   q(num, den);
    q.canonicalize();
    return q;
  }

  TropScalar sample_scalar(Rng& rng, Profile profile) {
    static std::array<long, 7> const nums = {-2, -1, -1, 0, 1, 1, 2};
    static std::array<long, 7> const dens = {1, 1, 2, 1, 2, 1, 1};
    switch (profile) {
      case Profile::dense_rational:
        return sample_rational(rng);
      case Profile::with_neginf:
        if (uniform_below(rng, 4) == 0) {
          return TropScalar::bottom();
        }
        return sample_rational(rng);
      case Profile::boundary: {
        if (uniform_below(rng, 4) == 0) {
          return TropScalar::bottom();
        }
        auto const i = uniform_below(rng, nums.size());
        return Rational(nums[i], dens[i]);
      }
      default:
        return sample_scalar(rng, BASE_PROFILES[uniform_below(rng, 3)]);
    }
  }

  TropMatrix sample_matrix(Rng& rng, Profile profile, std::size_t n) {
    Profile const entry_profile = profile == Profile::mixed
                                      ? BASE_PROFILES[uniform_below(rng, 3)]
                                      : profile;
    TropMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = sample_scalar(rng, entry_profile);
      }
    }
    if (profile == Profile::mixed) {
      switch (uniform_below(rng, 16)) {
        case 0:
          return TropMatrix::zero(n);
        case 1:
        case 2: {
          auto const i = uniform_below(rng, n);
          for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = TropScalar::bottom();
          }
          break;
        }
        case 3:
        case 4: {
          auto const j = uniform_below(rng, n);
          for (std::size_t i = 0; i < n; ++i) {
            a(i, j) = TropScalar::bottom();
          }
          break;
        }
        default:
          break;
      }
    }
    return a;
  }

  TropMatrix sample_unit(Rng& rng) {
    TropMatrix u(2);
    if (uniform_below(rng, 2) == 0) {
      u(0, 0) = sample_rational(rng);
      u(1, 1) = sample_rational(rng);
    } else {
      u(0, 1) = sample_rational(rng);
      u(1, 0) = sample_rational(rng);
    }
    return u;
  }

  ProjPoint sample_proj_point(Rng& rng) {
    switch (uniform_below(rng, 6)) {
      case 0:
        return ProjPoint::neg_inf();
      case 1:
        return ProjPoint::pos_inf();
      default:
        return sample_rational(rng);
    }
  }

  ClosedConvexSet sample_closed_set(Rng& rng) {
    switch (uniform_below(rng, 5)) {
      case 0:
        return ClosedConvexSet::empty();
      case 1:
        return ClosedConvexSet::point(sample_proj_point(rng));
      case 2: {
        Rational lo = sample_rational(rng);
        return ClosedConvexSet::interval(lo, Rational(lo + sample_width(rng)));
      }
      case 3: {
        Rational r = sample_rational(rng);
        return uniform_below(rng, 2) == 0
                   ? ClosedConvexSet::interval(ProjPoint::neg_inf(), r)
                   : ClosedConvexSet::interval(r, ProjPoint::pos_inf());
      }
      default:
        return ClosedConvexSet::full_line();
    }
  }

  ClosedConvexSet sample_isometric_copy(Rng& rng, ClosedConvexSet const& s) {
    IsoType const t = iso_type(s);
    switch (t.kind()) {
      case IsoType::Kind::empty:
      case IsoType::Kind::full_line:
        return s;
      case IsoType::Kind::singleton:
        return ClosedConvexSet::point(sample_proj_point(rng));
      case IsoType::Kind::finite_interval: {
        Rational lo = sample_rational(rng);
        return ClosedConvexSet::interval(lo, Rational(lo + t.length()));
      }
      default: {
        Rational r = sample_rational(rng);
        return uniform_below(rng, 2) == 0
                   ? ClosedConvexSet::interval(ProjPoint::neg_inf(), r)
                   : ClosedConvexSet::interval(r, ProjPoint::pos_inf());
      }
    }
  }

  IdealDescriptor sample_descriptor(Rng& rng) {
    switch (uniform_below(rng, 7)) {
      case 0:
        return IdealDescriptor::closed(IsoType::empty());
      case 1:
        return IdealDescriptor::closed(IsoType::singleton());
      case 2:
        return IdealDescriptor::closed(IsoType::finite_interval(sample_width(rng)));
      case 3:
        return IdealDescriptor::closed(IsoType::half_infinite());
      case 4:
        return IdealDescriptor::closed(IsoType::full_line());
      case 5:
        return IdealDescriptor::open_finite(sample_width(rng));
      default:
        return IdealDescriptor::open_line();
    }
  }

}  // namespace tropmono

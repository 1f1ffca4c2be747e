// Exact scalars for the max-plus semiring and the projective tropical line.
//
// TropScalar is an element of R ∪ {-inf} with  a ⊕ b = max(a, b)  and
// a ⊗ b = a + b.  ProjPoint is an element of R ∪ {-inf, +inf}, the image of
// a non-zero vector (a, b) under (a, b) ↦ b - a.  ExtDistance is the
// codomain of the metric on ProjPoint.  All finite values are GMP rationals
// kept in canonical form, so equality is structural.

#ifndef TROPMONO_SCALAR_HPP_
#define TROPMONO_SCALAR_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropmono {

  using Rational = mpq_class;

  // Parses `p/q`, `-p/q` or an integer literal into a canonical rational.
  Rational parse_rational(std::string_view token);
  std::string to_string(Rational const& q);

  class TropScalar {
   public:
    // Default construction gives -inf, the additive identity.
    TropScalar() = default;
    TropScalar(Rational value);  // NOLINT(runtime/explicit)
    TropScalar(long value);      // NOLINT(runtime/explicit)

    static TropScalar bottom() {
      return TropScalar();
    }

    bool is_bottom() const noexcept {
      return !_value.has_value();
    }

    bool is_finite() const noexcept {
      return _value.has_value();
    }

    // Throws DomainError for -inf.
    Rational const& value() const;

    friend bool operator==(TropScalar const& x, TropScalar const& y);
    friend std::strong_ordering operator<=>(TropScalar const& x,
                                            TropScalar const& y);

   private:
    std::optional<Rational> _value;
  };

  TropScalar oplus(TropScalar const& a, TropScalar const& b);
  TropScalar otimes(TropScalar const& a, TropScalar const& b);

  class ProjPoint {
   public:
    enum class Kind { neg_inf, finite, pos_inf };

    ProjPoint(Rational value);  // NOLINT(runtime/explicit)
    ProjPoint(long value);      // NOLINT(runtime/explicit)

    static ProjPoint neg_inf() {
      return ProjPoint(Kind::neg_inf);
    }

    static ProjPoint pos_inf() {
      return ProjPoint(Kind::pos_inf);
    }

    Kind kind() const noexcept {
      return _kind;
    }

    bool is_finite() const noexcept {
      return _kind == Kind::finite;
    }

    bool is_infinite() const noexcept {
      return _kind != Kind::finite;
    }

    // Throws DomainError for ±inf.
    Rational const& value() const;

    friend bool operator==(ProjPoint const& x, ProjPoint const& y);
    friend std::strong_ordering operator<=>(ProjPoint const& x,
                                            ProjPoint const& y);

   private:
    explicit ProjPoint(Kind kind) : _kind(kind), _value() {}

    Kind     _kind;
    Rational _value;
  };

  // Reflection x ↦ -x of the projective line; swaps -inf and +inf.
  ProjPoint negate(ProjPoint const& x);

  // p as an element of R̄; throws DomainError for +inf.
  TropScalar to_tropical(ProjPoint const& p);
  // -p as an element of R̄; throws DomainError for -inf.
  TropScalar neg_tropical(ProjPoint const& p);

  // The extended difference a - b on R̄ × R̄ \ {(-inf, -inf)}:
  //   a - b for rational a, b;  +inf if b = -inf;  -inf if a = -inf.
  // Throws DomainError for (-inf, -inf).
  ProjPoint ext_sub(TropScalar const& a, TropScalar const& b);

  // Projective class of the non-zero vector (first, second), i.e.
  // second - first in the extended sense.
  inline ProjPoint projectivise(TropScalar const& first,
                                TropScalar const& second) {
    return ext_sub(second, first);
  }

  class ExtDistance {
   public:
    explicit ExtDistance(Rational value);

    static ExtDistance infinite() {
      return ExtDistance();
    }

    bool is_infinite() const noexcept {
      return !_value.has_value();
    }

    bool is_finite() const noexcept {
      return _value.has_value();
    }

    Rational const& value() const;

    friend bool operator==(ExtDistance const& x, ExtDistance const& y);
    friend std::strong_ordering operator<=>(ExtDistance const& x,
                                            ExtDistance const& y);

   private:
    ExtDistance() = default;
    std::optional<Rational> _value;
  };

  // Sum in R≥0 ∪ {inf}.
  ExtDistance operator+(ExtDistance const& x, ExtDistance const& y);

  // |y - x| on reals, 0 between equal infinities, inf otherwise.
  ExtDistance delta(ProjPoint const& x, ProjPoint const& y);

  // Text encoding: an integer or `p/q` for rationals, `-inf` for the bottom
  // element, and additionally `+inf` for projective points.
  std::string to_string(TropScalar const& x);
  std::string to_string(ProjPoint const& x);
  std::string to_string(ExtDistance const& x);

  TropScalar parse_scalar(std::string_view token);
  ProjPoint  parse_proj_point(std::string_view token);

}  // namespace tropmono

#endif  // TROPMONO_SCALAR_HPP_

// Closed convex subsets of the projective tropical line R̂ and the
// projective column/row spaces of 2 × 2 matrices.
//
// A 2-generated convex set in R̂ is empty, a single point, or a closed
// interval [lo, hi] with lo < hi (endpoints may be ±inf). Two such sets are
// compared up to isometry for the metric `delta`, where orientation
// reversal is allowed; the isometry class is captured by IsoType.

#ifndef TROPMONO_GEOMETRY_HPP_
#define TROPMONO_GEOMETRY_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "tropmono/matrix.hpp"
#include "tropmono/scalar.hpp"

namespace tropmono {

  class ClosedConvexSet {
   public:
    enum class Kind { empty, singleton, interval };

    static ClosedConvexSet empty() {
      return ClosedConvexSet(Kind::empty, ProjPoint(0L), ProjPoint(0L));
    }

    static ClosedConvexSet point(ProjPoint p) {
      return ClosedConvexSet(Kind::singleton, p, p);
    }

    // Requires lo < hi; throws DomainError otherwise.
    static ClosedConvexSet interval(ProjPoint lo, ProjPoint hi);

    // Closed hull of two points: sorts them and collapses to a point when
    // they coincide.
    static ClosedConvexSet hull(ProjPoint p, ProjPoint q);

    static ClosedConvexSet full_line() {
      return interval(ProjPoint::neg_inf(), ProjPoint::pos_inf());
    }

    Kind kind() const noexcept {
      return _kind;
    }

    bool is_empty() const noexcept {
      return _kind == Kind::empty;
    }

    bool is_singleton() const noexcept {
      return _kind == Kind::singleton;
    }

    bool is_interval() const noexcept {
      return _kind == Kind::interval;
    }

    // Both throw DomainError for the empty set. For a singleton lo() and
    // hi() are the point.
    ProjPoint const& lo() const;
    ProjPoint const& hi() const;

    bool contains(ProjPoint const& p) const;

    friend bool operator==(ClosedConvexSet const& x, ClosedConvexSet const& y);

   private:
    ClosedConvexSet(Kind kind, ProjPoint lo, ProjPoint hi)
        : _kind(kind), _lo(std::move(lo)), _hi(std::move(hi)) {}

    Kind      _kind;
    ProjPoint _lo;
    ProjPoint _hi;
  };

  // {-x : x ∈ S}.
  ClosedConvexSet negate(ClosedConvexSet const& s);

  // Isometry class of a closed convex set.
  class IsoType {
   public:
    enum class Kind { empty, singleton, finite_interval, half_infinite, full_line };

    static IsoType empty() {
      return IsoType(Kind::empty);
    }
    static IsoType singleton() {
      return IsoType(Kind::singleton);
    }
    static IsoType half_infinite() {
      return IsoType(Kind::half_infinite);
    }
    static IsoType full_line() {
      return IsoType(Kind::full_line);
    }
    // Requires d > 0.
    static IsoType finite_interval(Rational d);

    Kind kind() const noexcept {
      return _kind;
    }

    // Diameter of a finite interval; throws DomainError for other kinds.
    Rational const& length() const;

    ExtDistance diameter() const;

    friend bool operator==(IsoType const& x, IsoType const& y);

    // Linear order of the isometric embedding relation: empty, singleton,
    // finite intervals by length, half-infinite, full line.
    friend std::strong_ordering operator<=>(IsoType const& x, IsoType const& y);

   private:
    explicit IsoType(Kind kind) : _kind(kind), _length() {}

    Kind     _kind;
    Rational _length;
  };

  // A fixed member of the isometry class: empty, {0}, [0,d], [0,+inf] or
  // [-inf,+inf].
  ClosedConvexSet representative(IsoType const& t);

  ExtDistance diameter(ClosedConvexSet const& s);
  IsoType     iso_type(ClosedConvexSet const& s);
  bool        isometric(ClosedConvexSet const& s, ClosedConvexSet const& t);

  bool embeds_isometrically(IsoType const& s, IsoType const& t);
  bool embeds_isometrically(ClosedConvexSet const& s, ClosedConvexSet const& t);

  // A closed convex subset of `t` isometric to `s`, or nullopt when `s` does
  // not embed isometrically in `t`.
  std::optional<ClosedConvexSet> embedding_image(ClosedConvexSet const& s,
                                                 ClosedConvexSet const& t);

  bool subset(ClosedConvexSet const& s, ClosedConvexSet const& t);

  // PC(A) for a 2 × 2 matrix A: the hull of the projectivised non-zero
  // columns. Throws DomainError unless A is 2 × 2.
  ClosedConvexSet proj_column_space(TropMatrix const& a);
  // PR(A) = PC(Aᵀ).
  ClosedConvexSet proj_row_space(TropMatrix const& a);

  // v is a max-plus combination of the columns of A, decided by vector
  // residuation A ⊗ (A \ v) = v. The zero vector is always a member.
  bool in_column_space(TropVector const& v, TropMatrix const& a);

  // Text: `empty`, `{p}`, `[lo,hi]`. Parsing `[p,p]` yields `{p}`.
  std::string     to_string(ClosedConvexSet const& s);
  ClosedConvexSet parse_set(std::string_view text);

  std::string to_string(IsoType const& t);

}  // namespace tropmono

#endif  // TROPMONO_GEOMETRY_HPP_

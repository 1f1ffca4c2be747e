// Two-sided ideals of the 2 × 2 max-plus matrix monoid.
//
// An ideal is determined by a single convex set S(I) of R̂, up to isometry:
// a closed convex set (principal ideals), an open interval of finite
// diameter w, or the open line (-inf, +inf). A matrix lies in the ideal
// exactly when its projective column space embeds isometrically in S(I).
// Ideals are represented only by this descriptor.

#ifndef TROPMONO_IDEALS_HPP_
#define TROPMONO_IDEALS_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "tropmono/geometry.hpp"
#include "tropmono/matrix.hpp"

namespace tropmono {

  class IdealDescriptor {
   public:
    enum class Kind { closed, open_finite, open_line };

    static IdealDescriptor closed(IsoType t) {
      return IdealDescriptor(Kind::closed, std::move(t), Rational(0));
    }
    // Open interval of diameter w > 0.
    static IdealDescriptor open_finite(Rational w);
    static IdealDescriptor open_line() {
      return IdealDescriptor(Kind::open_line, IsoType::empty(), Rational(0));
    }

    Kind kind() const noexcept {
      return _kind;
    }

    bool is_closed() const noexcept {
      return _kind == Kind::closed;
    }

    // Throws DomainError unless closed.
    IsoType const& closed_type() const;
    // Throws DomainError unless open_finite.
    Rational const& open_width() const;

    friend bool operator==(IdealDescriptor const& x, IdealDescriptor const& y);

   private:
    IdealDescriptor(Kind kind, IsoType t, Rational w)
        : _kind(kind), _type(std::move(t)), _width(std::move(w)) {}

    Kind     _kind;
    IsoType  _type;
    Rational _width;
  };

  bool ideal_contains(IdealDescriptor const& d, TropMatrix const& a);

  IdealDescriptor principal_ideal_of(TropMatrix const& b);

  // Inclusion order of the ideals, which is total:
  //   closed:empty < closed:point < open:w < closed:interval:w < open:w'
  //   (w < w') < ... < openline < closed:halfinf < closed:fullline
  std::strong_ordering ideal_compare(IdealDescriptor const& x,
                                     IdealDescriptor const& y);

  // Finitely generated ideals are principal, generated by a generator whose
  // column space is largest. Throws DomainError for an empty list.
  IdealDescriptor ideal_from_generators(std::span<TropMatrix const> gens);

  bool is_principal(IdealDescriptor const& d);

  // A non-principal ideal is a principal ideal minus its generating J-class,
  // given here by the J-class's isometry type.
  std::pair<IdealDescriptor, std::optional<IsoType>>
  decompose(IdealDescriptor const& d);

  // closed:empty | closed:point | closed:interval:<d> | closed:halfinf |
  // closed:fullline | open:<w> | openline
  std::string     to_string(IdealDescriptor const& d);
  IdealDescriptor parse_descriptor(std::string_view text);

}  // namespace tropmono

#endif  // TROPMONO_IDEALS_HPP_

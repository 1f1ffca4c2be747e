// Green's relations and preorders on the monoid of 2 × 2 max-plus matrices.
//
//   A ≤_R B  ⇔  PC(A) ⊆ PC(B)
//   A ≤_L B  ⇔  PR(A) ⊆ PR(B)
//   A ≤_J B  ⇔  PC(A) embeds isometrically in PC(B)
//   A D B    ⇔  A J B  ⇔  PC(A) ≅ PC(B)
//
// All decisions are exact. The witness functions build matrices realising
// the relations and check them before returning.

#ifndef TROPMONO_GREEN_HPP_
#define TROPMONO_GREEN_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tropmono/geometry.hpp"
#include "tropmono/matrix.hpp"

namespace tropmono {

  enum class GreenRelation { R, L, H, D, J, leq_R, leq_L, leq_J };

  std::string   to_string(GreenRelation rel);
  // Accepts R, L, H, D, J, leqR, leqL, leqJ.
  GreenRelation parse_relation(std::string_view text);

  bool leq_R(TropMatrix const& a, TropMatrix const& b);
  bool leq_L(TropMatrix const& a, TropMatrix const& b);
  bool leq_J(TropMatrix const& a, TropMatrix const& b);
  bool related(GreenRelation rel, TropMatrix const& a, TropMatrix const& b);

  // The eight shapes of a 2-generated cone; one per R-class family.
  class RClassForm {
   public:
    enum class Kind {
      zero,             // R_∅
      singleton_neg_inf,  // R_{-inf}
      singleton_finite,   // R_{y}
      singleton_pos_inf,  // R_{+inf}
      half_low,           // R_[-inf, y]
      finite_interval,    // R_[x, y]
      half_high,          // R_[y, +inf]
      full_line           // R_R̂ (the units)
    };

    explicit RClassForm(ClosedConvexSet pc);

    Kind kind() const noexcept {
      return _kind;
    }

    ClosedConvexSet const& set() const noexcept {
      return _set;
    }

    // Finite parameters of the form: none, {y} or {x, y}.
    std::optional<Rational> x() const;
    std::optional<Rational> y() const;

    friend bool operator==(RClassForm const& p, RClassForm const& q) {
      return p._set == q._set;
    }

   private:
    Kind            _kind;
    ClosedConvexSet _set;
  };

  std::string to_string(RClassForm::Kind k);

  RClassForm r_class_of(TropMatrix const& a);
  RClassForm l_class_of(TropMatrix const& a);

  // A matrix Z with PC(Z) = m and PR(Z) = n. Throws DomainError unless m
  // and n are isometric.
  TropMatrix witness_Z(ClosedConvexSet const& m, ClosedConvexSet const& n);

  // Z with B R Z and Z L A. Throws DomainError unless A D B.
  TropMatrix d_class_witness(TropMatrix const& a, TropMatrix const& b);

  // (X, Y) with X ⊗ B ⊗ Y = A, or nullopt when A is not J-below B.
  std::optional<std::pair<TropMatrix, TropMatrix>>
  j_witness(TropMatrix const& a, TropMatrix const& b);

}  // namespace tropmono

#endif  // TROPMONO_GREEN_HPP_

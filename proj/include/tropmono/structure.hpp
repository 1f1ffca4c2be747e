// Idempotents, regularity and maximal subgroups of the 2 × 2 max-plus
// matrix monoid.
//
// Every idempotent has one of the shapes
//
//   upper    ((0, x), (y, x+y))
//   diagonal ((0, x), (y, 0))
//   lower    ((x+y, x), (y, 0))
//   zero     all -inf
//
// with x, y ∈ R̄ and x + y ≤ 0.

#ifndef TROPMONO_STRUCTURE_HPP_
#define TROPMONO_STRUCTURE_HPP_

#include <optional>
#include <string>

#include "tropmono/geometry.hpp"
#include "tropmono/matrix.hpp"

namespace tropmono {

  struct IdempotentForm {
    enum class Kind { upper, diagonal, lower, zero };

    Kind       kind;
    TropScalar x;
    TropScalar y;

    // The matrix the form stands for. Throws DomainError when x + y > 0.
    TropMatrix to_matrix() const;

    friend bool operator==(IdempotentForm const&, IdempotentForm const&)
        = default;
  };

  std::string to_string(IdempotentForm::Kind k);

  bool is_idempotent(TropMatrix const& a);

  // Pure shape match against the four families, without squaring. Ties are
  // broken in the order zero, diagonal, upper, lower. Requires 2 × 2.
  std::optional<IdempotentForm> match_idempotent_family(TropMatrix const& a);

  // Throws DomainError unless `e` is a 2 × 2 idempotent.
  IdempotentForm idempotent_form(TropMatrix const& e);

  // An idempotent E with PC(E) = m and PR(E) = n, when the H-class
  // R_m ∩ L_n contains one.
  std::optional<TropMatrix> idempotent_in_H(ClosedConvexSet const& m,
                                            ClosedConvexSet const& n);

  // Y with A ⊗ Y ⊗ A = A. Y is the greatest solution of A ⊗ Y ⊗ A ≤ A over
  // the completed carrier with +inf entries replaced by 0, and is checked
  // before it is returned. Requires 2 × 2.
  TropMatrix regular_witness(TropMatrix const& a);

  enum class GroupType { trivial, reals, reals_times_s2, reals_wreath_s2 };

  std::string to_string(GroupType g);

  // Isomorphism type of the maximal subgroup R_m ∩ L_n. Throws DomainError
  // if that H-class has no idempotent.
  GroupType group_type_of_H(ClosedConvexSet const& m, ClosedConvexSet const& n);

  enum class SubgroupFamily { W, X, Y, Z };

  std::string    to_string(SubgroupFamily f);
  SubgroupFamily parse_subgroup_family(std::string_view text);

  // Parameters of the explicit subgroup families:
  //   W_a = ((a, -inf), (-inf, -inf))
  //   X_a = ((a, a-y), (a+x, a))     x < y real
  //   Y_a = ((a, a-x), (a+y, a))     x < y real
  //   Z_a = ((a, -inf), (a+x, a))    x real
  struct SubgroupParams {
    std::optional<Rational> x;
    std::optional<Rational> y;
  };

  // Throws DomainError when the family's parameters are missing or x ≥ y.
  TropMatrix subgroup_element(SubgroupFamily     family,
                              Rational const&    a,
                              SubgroupParams const& params = {});

  // E ⊗ v = v. Throws DomainError unless `e` is idempotent and v ∈ C(E).
  bool fixes_image(TropMatrix const& e, TropVector const& v);

}  // namespace tropmono

#endif  // TROPMONO_STRUCTURE_HPP_

#include "tropmono/structure.hpp"

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    TropScalar const ZERO(0L);

    TropMatrix checked_idempotent(TropMatrix const&      e,
                                  ClosedConvexSet const& m,
                                  ClosedConvexSet const& n) {
      if (!is_idempotent(e) || proj_column_space(e) != m
          || proj_row_space(e) != n) {
        throw VerificationFailure("idempotent_in_H: construction for ("
                                  + to_string(m) + ", " + to_string(n)
                                  + ") is not an idempotent of that H-class");
      }
      return e;
    }
  }  // namespace

  TropMatrix IdempotentForm::to_matrix() const {
    TropScalar const sum = otimes(x, y);
    if (kind != Kind::zero && sum > ZERO) {
      throw DomainError("IdempotentForm::to_matrix: need x + y <= 0");
    }
    switch (kind) {
      case Kind::upper:
        return TropMatrix{{ZERO, x}, {y, sum}};
      case Kind::diagonal:
        return TropMatrix{{ZERO, x}, {y, ZERO}};
      case Kind::lower:
        return TropMatrix{{sum, x}, {y, ZERO}};
      default:
        return TropMatrix::zero(2);
    }
  }

  std::string to_string(IdempotentForm::Kind k) {
    switch (k) {
      case IdempotentForm::Kind::upper:
        return "upper";
      case IdempotentForm::Kind::diagonal:
        return "diagonal";
      case IdempotentForm::Kind::lower:
        return "lower";
      default:
        return "zero";
    }
  }

  bool is_idempotent(TropMatrix const& a) {
    return mat_mul(a, a) == a;
  }

  std::optional<IdempotentForm> match_idempotent_family(TropMatrix const& a) {
    if (a.dim() != 2) {
      throw DomainError("match_idempotent_family: expected a 2 x 2 matrix");
    }
    using K = IdempotentForm::Kind;
    if (a.is_zero()) {
      return IdempotentForm{K::zero, TropScalar::bottom(), TropScalar::bottom()};
    }
    TropScalar const& x   = a(0, 1);
    TropScalar const& y   = a(1, 0);
    TropScalar const  sum = otimes(x, y);
    if (sum > ZERO) {
      return std::nullopt;
    }
    if (a(0, 0) == ZERO && a(1, 1) == ZERO) {
      return IdempotentForm{K::diagonal, x, y};
    }
    if (a(0, 0) == ZERO && a(1, 1) == sum) {
      return IdempotentForm{K::upper, x, y};
    }
    if (a(1, 1) == ZERO && a(0, 0) == sum) {
      return IdempotentForm{K::lower, x, y};
    }
    return std::nullopt;
  }

  IdempotentForm idempotent_form(TropMatrix const& e) {
    if (e.dim() != 2 || !is_idempotent(e)) {
      throw DomainError("idempotent_form: not a 2 x 2 idempotent");
    }
    auto form = match_idempotent_family(e);
    if (!form) {
      throw VerificationFailure("idempotent_form: idempotent matches no family");
    }
    return *form;
  }

  std::optional<TropMatrix> idempotent_in_H(ClosedConvexSet const& m,
                                            ClosedConvexSet const& n) {
    using PK = ProjPoint::Kind;
    if (m.is_empty() || n.is_empty()) {
      if (m.is_empty() && n.is_empty()) {
        return TropMatrix::zero(2);
      }
      return std::nullopt;
    }
    if (m.is_singleton() && n.is_singleton()) {
      ProjPoint const& x = m.lo();
      ProjPoint const& y = n.lo();
      if (x.is_infinite() && y.is_infinite() && x.kind() != y.kind()) {
        return std::nullopt;
      }
      if (x.kind() != PK::pos_inf && y.kind() != PK::pos_inf) {
        TropScalar const sx = to_tropical(x), sy = to_tropical(y);
        TropScalar const sum = otimes(sx, sy);
        if (sum <= ZERO) {
          return checked_idempotent(TropMatrix{{ZERO, sy}, {sx, sum}}, m, n);
        }
      }
      // x + y ≥ 0, so x, y ≠ -inf. Columns must project to x and rows to y,
      // which puts -x above the diagonal: ((-x-y, -x), (-y, 0)).
      TropScalar const nx = neg_tropical(x), ny = neg_tropical(y);
      return checked_idempotent(TropMatrix{{otimes(nx, ny), nx}, {ny, ZERO}},
                                m, n);
    }
    if (m.is_interval() && n == negate(m)) {
      // M = [x, y]: ((0, -y), (x, 0)).
      return checked_idempotent(TropMatrix{{ZERO, neg_tropical(m.hi())},
                                           {to_tropical(m.lo()), ZERO}},
                                m, n);
    }
    return std::nullopt;
  }

  TropMatrix regular_witness(TropMatrix const& a) {
    if (a.dim() != 2) {
      throw DomainError("regular_witness: expected a 2 x 2 matrix");
    }
    TropMatrix const y = materialize(right_residual(left_residual(a, a), a));
    if (mat_mul(mat_mul(a, y), a) != a) {
      throw VerificationFailure("regular_witness: A Y A != A");
    }
    return y;
  }

  std::string to_string(GroupType g) {
    switch (g) {
      case GroupType::trivial:
        return "trivial";
      case GroupType::reals:
        return "R";
      case GroupType::reals_times_s2:
        return "R x S2";
      default:
        return "R wr S2";
    }
  }

  GroupType group_type_of_H(ClosedConvexSet const& m, ClosedConvexSet const& n) {
    if (!idempotent_in_H(m, n)) {
      throw DomainError("group_type_of_H: H-class of (" + to_string(m) + ", "
                        + to_string(n) + ") contains no idempotent");
    }
    switch (iso_type(m).kind()) {
      case IsoType::Kind::empty:
        return GroupType::trivial;
      case IsoType::Kind::singleton:
      case IsoType::Kind::half_infinite:
        return GroupType::reals;
      case IsoType::Kind::finite_interval:
        return GroupType::reals_times_s2;
      default:
        return GroupType::reals_wreath_s2;
    }
  }

  std::string to_string(SubgroupFamily f) {
    switch (f) {
      case SubgroupFamily::W:
        return "W";
      case SubgroupFamily::X:
        return "X";
      case SubgroupFamily::Y:
        return "Y";
      default:
        return "Z";
    }
  }

  SubgroupFamily parse_subgroup_family(std::string_view text) {
    if (text == "W") {
      return SubgroupFamily::W;
    } else if (text == "X") {
      return SubgroupFamily::X;
    } else if (text == "Y") {
      return SubgroupFamily::Y;
    } else if (text == "Z") {
      return SubgroupFamily::Z;
    }
    throw ParseError("expected one of W, X, Y, Z", 0);
  }

  TropMatrix subgroup_element(SubgroupFamily        family,
                              Rational const&       a,
                              SubgroupParams const& params) {
    TropScalar const ninf = TropScalar::bottom();
    switch (family) {
      case SubgroupFamily::W:
        return TropMatrix{{a, ninf}, {ninf, ninf}};
      case SubgroupFamily::Z: {
        if (!params.x) {
          throw DomainError("subgroup_element: family Z needs x");
        }
        return TropMatrix{{a, ninf}, {Rational(a + *params.x), a}};
      }
      default:
        break;
    }
    if (!params.x || !params.y || !(*params.x < *params.y)) {
      throw DomainError("subgroup_element: families X and Y need real x < y");
    }
    Rational const& x = *params.x;
    Rational const& y = *params.y;
    if (family == SubgroupFamily::X) {
      return TropMatrix{{a, Rational(a - y)}, {Rational(a + x), a}};
    }
    return TropMatrix{{a, Rational(a - x)}, {Rational(a + y), a}};
  }

  bool fixes_image(TropMatrix const& e, TropVector const& v) {
    if (!is_idempotent(e)) {
      throw DomainError("fixes_image: matrix is not idempotent");
    }
    if (!in_column_space(v, e)) {
      throw DomainError("fixes_image: vector is not in the column space");
    }
    return mat_vec(e, v) == v;
  }

}  // namespace tropmono

#include "tropmono/green.hpp"

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    TropScalar const NEG_INF = TropScalar::bottom();
    TropScalar const ZERO(0L);

    TropMatrix singleton_witness(ProjPoint const& x, ProjPoint const& y) {
      auto const pos = ProjPoint::Kind::pos_inf;
      auto const neg = ProjPoint::Kind::neg_inf;
      if (x.kind() == pos && y.kind() == neg) {
        return TropMatrix{{NEG_INF, NEG_INF}, {ZERO, NEG_INF}};
      }
      if (x.kind() == neg && y.kind() == pos) {
        return TropMatrix{{NEG_INF, ZERO}, {NEG_INF, NEG_INF}};
      }
      if (x.kind() != pos && y.kind() != pos) {
        TropScalar const sx = to_tropical(x), sy = to_tropical(y);
        TropScalar const sum = otimes(sx, sy);
        if (sum <= ZERO) {
          return TropMatrix{{ZERO, sy}, {sx, sum}};
        }
      }
      // Here x, y ≠ -inf: ((-(x+y), -x), (-y, 0)).
      TropScalar const nx = neg_tropical(x), ny = neg_tropical(y);
      return TropMatrix{{otimes(nx, ny), nx}, {ny, ZERO}};
    }

    TropMatrix half_infinite_witness(ClosedConvexSet const& m,
                                     ClosedConvexSet const& n) {
      bool const m_low = m.lo().is_infinite();  // m = [-inf, y]
      bool const n_low = n.lo().is_infinite();
      if (m_low) {
        TropScalar const y = m.hi().value();
        if (n_low) {
          // N = [-inf, z]
          return TropMatrix{{ZERO, n.hi().value()}, {y, NEG_INF}};
        }
        // N = [x, +inf]
        TropScalar const x = n.lo().value();
        return TropMatrix{{ZERO, x}, {NEG_INF, otimes(x, y)}};
      }
      // m = [y, +inf]: mirror through both row and column swaps, which
      // negates both projective spaces.
      TropMatrix z = half_infinite_witness(negate(m), negate(n));
      return TropMatrix{{z(1, 1), z(1, 0)}, {z(0, 1), z(0, 0)}};
    }
  }  // namespace

  std::string to_string(GreenRelation rel) {
    switch (rel) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::H:
        return "H";
      case GreenRelation::D:
        return "D";
      case GreenRelation::J:
        return "J";
      case GreenRelation::leq_R:
        return "leqR";
      case GreenRelation::leq_L:
        return "leqL";
      default:
        return "leqJ";
    }
  }

  GreenRelation parse_relation(std::string_view text) {
    for (auto rel : {GreenRelation::R,
                     GreenRelation::L,
                     GreenRelation::H,
                     GreenRelation::D,
                     GreenRelation::J,
                     GreenRelation::leq_R,
                     GreenRelation::leq_L,
                     GreenRelation::leq_J}) {
      if (text == to_string(rel)) {
        return rel;
      }
    }
    throw ParseError("expected one of R, L, H, D, J, leqR, leqL, leqJ", 0);
  }

  bool leq_R(TropMatrix const& a, TropMatrix const& b) {
    return subset(proj_column_space(a), proj_column_space(b));
  }

  bool leq_L(TropMatrix const& a, TropMatrix const& b) {
    return subset(proj_row_space(a), proj_row_space(b));
  }

  bool leq_J(TropMatrix const& a, TropMatrix const& b) {
    return embeds_isometrically(proj_column_space(a), proj_column_space(b));
  }

  bool related(GreenRelation rel, TropMatrix const& a, TropMatrix const& b) {
    switch (rel) {
      case GreenRelation::R:
        return proj_column_space(a) == proj_column_space(b);
      case GreenRelation::L:
        return proj_row_space(a) == proj_row_space(b);
      case GreenRelation::H:
        return related(GreenRelation::R, a, b) && related(GreenRelation::L, a, b);
      case GreenRelation::D:
      case GreenRelation::J:
        return isometric(proj_column_space(a), proj_column_space(b));
      case GreenRelation::leq_R:
        return leq_R(a, b);
      case GreenRelation::leq_L:
        return leq_L(a, b);
      default:
        return leq_J(a, b);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // R-class forms
  ////////////////////////////////////////////////////////////////////////

  RClassForm::RClassForm(ClosedConvexSet pc) : _kind(), _set(std::move(pc)) {
    using PK = ProjPoint::Kind;
    switch (_set.kind()) {
      case ClosedConvexSet::Kind::empty:
        _kind = Kind::zero;
        break;
      case ClosedConvexSet::Kind::singleton:
        _kind = _set.lo().kind() == PK::neg_inf
                    ? Kind::singleton_neg_inf
                    : (_set.lo().kind() == PK::pos_inf ? Kind::singleton_pos_inf
                                                       : Kind::singleton_finite);
        break;
      default: {
        bool lo_inf = _set.lo().is_infinite(), hi_inf = _set.hi().is_infinite();
        _kind = lo_inf ? (hi_inf ? Kind::full_line : Kind::half_low)
                       : (hi_inf ? Kind::half_high : Kind::finite_interval);
      }
    }
  }

  std::optional<Rational> RClassForm::x() const {
    if (_kind == Kind::finite_interval) {
      return _set.lo().value();
    }
    return std::nullopt;
  }

  std::optional<Rational> RClassForm::y() const {
    switch (_kind) {
      case Kind::singleton_finite:
      case Kind::half_low:
      case Kind::finite_interval:
        return _set.hi().value();
      case Kind::half_high:
        return _set.lo().value();
      default:
        return std::nullopt;
    }
  }

  std::string to_string(RClassForm::Kind k) {
    switch (k) {
      case RClassForm::Kind::zero:
        return "zero";
      case RClassForm::Kind::singleton_neg_inf:
        return "point_neginf";
      case RClassForm::Kind::singleton_finite:
        return "point";
      case RClassForm::Kind::singleton_pos_inf:
        return "point_posinf";
      case RClassForm::Kind::half_low:
        return "half_low";
      case RClassForm::Kind::finite_interval:
        return "interval";
      case RClassForm::Kind::half_high:
        return "half_high";
      default:
        return "full_line";
    }
  }

  RClassForm r_class_of(TropMatrix const& a) {
    return RClassForm(proj_column_space(a));
  }

  RClassForm l_class_of(TropMatrix const& a) {
    return RClassForm(proj_row_space(a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  TropMatrix witness_Z(ClosedConvexSet const& m, ClosedConvexSet const& n) {
    if (!isometric(m, n)) {
      throw DomainError("witness_Z: " + to_string(m) + " and " + to_string(n)
                        + " are not isometric");
    }
    TropMatrix z(2);
    switch (iso_type(m).kind()) {
      case IsoType::Kind::empty:
        z = TropMatrix::zero(2);
        break;
      case IsoType::Kind::full_line:
        z = TropMatrix::identity(2);
        break;
      case IsoType::Kind::singleton:
        z = singleton_witness(m.lo(), n.lo());
        break;
      case IsoType::Kind::finite_interval: {
        // ((0, w), (x, w + y)) for M = [x, y], N = [w, z].
        TropScalar const x = m.lo().value(), y = m.hi().value();
        TropScalar const w = n.lo().value();
        z = TropMatrix{{ZERO, w}, {x, otimes(w, y)}};
        break;
      }
      default:
        z = half_infinite_witness(m, n);
    }
    if (proj_column_space(z) != m || proj_row_space(z) != n) {
      throw VerificationFailure("witness_Z: construction for (" + to_string(m)
                                + ", " + to_string(n) + ") failed");
    }
    return z;
  }

  TropMatrix d_class_witness(TropMatrix const& a, TropMatrix const& b) {
    if (!related(GreenRelation::D, a, b)) {
      throw DomainError("d_class_witness: matrices are not D-related");
    }
    return witness_Z(proj_column_space(b), proj_row_space(a));
  }

  std::optional<std::pair<TropMatrix, TropMatrix>>
  j_witness(TropMatrix const& a, TropMatrix const& b) {
    auto image = embedding_image(proj_column_space(a), proj_column_space(b));
    if (!image) {
      return std::nullopt;
    }
    // PC(Z) ⊆ PC(B) gives Z = B ⊗ Y; PR(Z) = PR(A) gives A = X ⊗ Z.
    TropMatrix const z = witness_Z(*image, proj_row_space(a));
    auto             y = solve_right(b, z);
    auto             x = solve_left(z, a);
    if (!x || !y || mat_mul(mat_mul(*x, b), *y) != a) {
      throw VerificationFailure("j_witness: residuation failed");
    }
    return std::make_pair(std::move(*x), std::move(*y));
  }

}  // namespace tropmono

#include "tropmono/geometry.hpp"

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    void require_2x2(TropMatrix const& a, char const* where) {
      if (a.dim() != 2) {
        throw DomainError(std::string(where) + ": expected a 2 x 2 matrix, got "
                          + std::to_string(a.dim()) + " x "
                          + std::to_string(a.dim()));
      }
    }

    int rank(IsoType::Kind k) {
      return static_cast<int>(k);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ClosedConvexSet
  ////////////////////////////////////////////////////////////////////////

  ClosedConvexSet ClosedConvexSet::interval(ProjPoint lo, ProjPoint hi) {
    if (!(lo < hi)) {
      throw DomainError("ClosedConvexSet::interval: need lo < hi, got ["
                        + to_string(lo) + "," + to_string(hi) + "]");
    }
    return ClosedConvexSet(Kind::interval, std::move(lo), std::move(hi));
  }

  ClosedConvexSet ClosedConvexSet::hull(ProjPoint p, ProjPoint q) {
    if (p == q) {
      return point(std::move(p));
    }
    return p < q ? interval(std::move(p), std::move(q))
                 : interval(std::move(q), std::move(p));
  }

  ProjPoint const& ClosedConvexSet::lo() const {
    if (is_empty()) {
      throw DomainError("ClosedConvexSet::lo: empty set");
    }
    return _lo;
  }

  ProjPoint const& ClosedConvexSet::hi() const {
    if (is_empty()) {
      throw DomainError("ClosedConvexSet::hi: empty set");
    }
    return _hi;
  }

  bool ClosedConvexSet::contains(ProjPoint const& p) const {
    return !is_empty() && _lo <= p && p <= _hi;
  }

  bool operator==(ClosedConvexSet const& x, ClosedConvexSet const& y) {
    if (x._kind != y._kind) {
      return false;
    }
    return x.is_empty() || (x._lo == y._lo && x._hi == y._hi);
  }

  ClosedConvexSet negate(ClosedConvexSet const& s) {
    if (s.is_empty()) {
      return s;
    }
    return ClosedConvexSet::hull(negate(s.hi()), negate(s.lo()));
  }

  ////////////////////////////////////////////////////////////////////////
  // IsoType
  ////////////////////////////////////////////////////////////////////////

  IsoType IsoType::finite_interval(Rational d) {
    if (sgn(d) <= 0) {
      throw DomainError("IsoType::finite_interval: length must be positive");
    }
    IsoType t(Kind::finite_interval);
    t._length = std::move(d);
    t._length.canonicalize();
    return t;
  }

  Rational const& IsoType::length() const {
    if (_kind != Kind::finite_interval) {
      throw DomainError("IsoType::length: not a finite interval");
    }
    return _length;
  }

  ExtDistance IsoType::diameter() const {
    switch (_kind) {
      case Kind::empty:
      case Kind::singleton:
        return ExtDistance(Rational(0));
      case Kind::finite_interval:
        return ExtDistance(_length);
      default:
        return ExtDistance::infinite();
    }
  }

  bool operator==(IsoType const& x, IsoType const& y) {
    return x._kind == y._kind
           && (x._kind != IsoType::Kind::finite_interval
               || x._length == y._length);
  }

  std::strong_ordering operator<=>(IsoType const& x, IsoType const& y) {
    if (x._kind != y._kind) {
      return rank(x._kind) <=> rank(y._kind);
    }
    if (x._kind != IsoType::Kind::finite_interval) {
      return std::strong_ordering::equal;
    }
    int c = cmp(x._length, y._length);
    return c <=> 0;
  }

  ClosedConvexSet representative(IsoType const& t) {
    switch (t.kind()) {
      case IsoType::Kind::empty:
        return ClosedConvexSet::empty();
      case IsoType::Kind::singleton:
        return ClosedConvexSet::point(0L);
      case IsoType::Kind::finite_interval:
        return ClosedConvexSet::interval(0L, t.length());
      case IsoType::Kind::half_infinite:
        return ClosedConvexSet::interval(0L, ProjPoint::pos_inf());
      default:
        return ClosedConvexSet::full_line();
    }
  }

  ExtDistance diameter(ClosedConvexSet const& s) {
    if (!s.is_interval()) {
      return ExtDistance(Rational(0));
    }
    return delta(s.lo(), s.hi());
  }

  IsoType iso_type(ClosedConvexSet const& s) {
    switch (s.kind()) {
      case ClosedConvexSet::Kind::empty:
        return IsoType::empty();
      case ClosedConvexSet::Kind::singleton:
        return IsoType::singleton();
      default:
        break;
    }
    bool lo_inf = s.lo().is_infinite(), hi_inf = s.hi().is_infinite();
    if (lo_inf && hi_inf) {
      return IsoType::full_line();
    }
    if (lo_inf || hi_inf) {
      return IsoType::half_infinite();
    }
    return IsoType::finite_interval(Rational(s.hi().value() - s.lo().value()));
  }

  bool isometric(ClosedConvexSet const& s, ClosedConvexSet const& t) {
    return iso_type(s) == iso_type(t);
  }

  bool embeds_isometrically(IsoType const& s, IsoType const& t) {
    return s <= t;
  }

  bool embeds_isometrically(ClosedConvexSet const& s, ClosedConvexSet const& t) {
    return embeds_isometrically(iso_type(s), iso_type(t));
  }

  std::optional<ClosedConvexSet> embedding_image(ClosedConvexSet const& s,
                                                 ClosedConvexSet const& t) {
    if (!embeds_isometrically(s, t)) {
      return std::nullopt;
    }
    if (subset(s, t) || s.is_empty()) {
      return s;
    }
    if (s.is_singleton()) {
      return ClosedConvexSet::point(t.lo());
    }
    IsoType const ts = iso_type(s);
    if (ts.kind() != IsoType::Kind::finite_interval) {
      // half-infinite into half-infinite or full line, full into full
      return ts == iso_type(t) ? t : s;
    }
    // A finite interval of length d inside t: anchor at a real endpoint of t.
    Rational const& d = ts.length();
    if (t.lo().is_finite()) {
      return ClosedConvexSet::interval(t.lo(), Rational(t.lo().value() + d));
    }
    if (t.hi().is_finite()) {
      return ClosedConvexSet::interval(Rational(t.hi().value() - d), t.hi());
    }
    return ClosedConvexSet::interval(Rational(0), d);
  }

  bool subset(ClosedConvexSet const& s, ClosedConvexSet const& t) {
    if (s.is_empty()) {
      return true;
    }
    return t.contains(s.lo()) && t.contains(s.hi());
  }

  ClosedConvexSet proj_column_space(TropMatrix const& a) {
    require_2x2(a, "proj_column_space");
    TropVector const c0 = a.column(0), c1 = a.column(1);
    if (c0.is_zero() && c1.is_zero()) {
      return ClosedConvexSet::empty();
    }
    if (c0.is_zero()) {
      return ClosedConvexSet::point(projectivise(c1[0], c1[1]));
    }
    if (c1.is_zero()) {
      return ClosedConvexSet::point(projectivise(c0[0], c0[1]));
    }
    return ClosedConvexSet::hull(projectivise(c0[0], c0[1]),
                                 projectivise(c1[0], c1[1]));
  }

  ClosedConvexSet proj_row_space(TropMatrix const& a) {
    require_2x2(a, "proj_row_space");
    return proj_column_space(transpose(a));
  }

  bool in_column_space(TropVector const& v, TropMatrix const& a) {
    require_2x2(a, "in_column_space");
    if (v.dim() != 2) {
      throw DomainError("in_column_space: dimension mismatch");
    }
    if (v.is_zero()) {
      return true;
    }
    return mat_mul(a, left_residual(a, v)) == to_residual(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(ClosedConvexSet const& s) {
    switch (s.kind()) {
      case ClosedConvexSet::Kind::empty:
        return "empty";
      case ClosedConvexSet::Kind::singleton:
        return "{" + to_string(s.lo()) + "}";
      default:
        return "[" + to_string(s.lo()) + "," + to_string(s.hi()) + "]";
    }
  }

  ClosedConvexSet parse_set(std::string_view text) {
    if (text == "empty") {
      return ClosedConvexSet::empty();
    }
    if (text.empty()) {
      throw ParseError("expected 'empty', '{' or '['", 0);
    }
    auto point_at = [&](std::size_t begin, std::size_t end) {
      try {
        return parse_proj_point(text.substr(begin, end - begin));
      } catch (ParseError const& e) {
        throw ParseError("bad point in set", begin + e.position());
      }
    };
    if (text.front() == '{') {
      if (text.back() != '}') {
        throw ParseError("expected '}'", text.size());
      }
      return ClosedConvexSet::point(point_at(1, text.size() - 1));
    }
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ParseError("expected ']'", text.size());
      }
      std::size_t comma = text.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected ','", text.size() - 1);
      }
      ProjPoint lo = point_at(1, comma);
      ProjPoint hi = point_at(comma + 1, text.size() - 1);
      if (hi < lo) {
        throw ParseError("interval endpoints out of order", comma + 1);
      }
      return ClosedConvexSet::hull(lo, hi);
    }
    throw ParseError("expected 'empty', '{' or '['", 0);
  }

  std::string to_string(IsoType const& t) {
    switch (t.kind()) {
      case IsoType::Kind::empty:
        return "empty";
      case IsoType::Kind::singleton:
        return "point";
      case IsoType::Kind::finite_interval:
        return "interval:" + to_string(t.length());
      case IsoType::Kind::half_infinite:
        return "halfinf";
      default:
        return "fullline";
    }
  }

}  // namespace tropmono

#include "tropmono/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    std::strong_ordering compare(Rational const& x, Rational const& y) {
      int c = cmp(x, y);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

    std::size_t scan_digits(std::string_view s, std::size_t pos) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      return pos;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rational text
  ////////////////////////////////////////////////////////////////////////

  Rational parse_rational(std::string_view token) {
    std::size_t pos = 0;
    bool        negative = false;
    if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
      negative = token[pos] == '-';
      ++pos;
    }
    std::size_t num_end = scan_digits(token, pos);
    if (num_end == pos) {
      throw ParseError("expected digit", pos);
    }
    std::string numerator(token.substr(pos, num_end - pos));
    std::string denominator = "1";
    pos = num_end;
    if (pos < token.size() && token[pos] == '/') {
      ++pos;
      std::size_t den_end = scan_digits(token, pos);
      if (den_end == pos) {
        throw ParseError("expected digit after '/'", pos);
      }
      denominator = std::string(token.substr(pos, den_end - pos));
      if (mpz_class(denominator) == 0) {
        throw ParseError("denominator must be non-zero", pos);
      }
      pos = den_end;
    }
    if (pos != token.size()) {
      throw ParseError("expected '/' or end of rational", pos);
    }
    Rational q{mpz_class(numerator), mpz_class(denominator)};
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  std::string to_string(Rational const& q) {
    return q.get_str();
  }

  ////////////////////////////////////////////////////////////////////////
  // TropScalar
  ////////////////////////////////////////////////////////////////////////

  TropScalar::TropScalar(Rational value) : _value(std::move(value)) {
    _value->canonicalize();
  }

  TropScalar::TropScalar(long value) : _value(Rational(value)) {}

  Rational const& TropScalar::value() const {
    if (!_value) {
      throw DomainError("TropScalar::value: -inf has no rational value");
    }
    return *_value;
  }

  bool operator==(TropScalar const& x, TropScalar const& y) {
    if (x.is_bottom() || y.is_bottom()) {
      return x.is_bottom() == y.is_bottom();
    }
    return *x._value == *y._value;
  }

  std::strong_ordering operator<=>(TropScalar const& x, TropScalar const& y) {
    if (x.is_bottom() || y.is_bottom()) {
      return y.is_bottom() <=> x.is_bottom();
    }
    return compare(*x._value, *y._value);
  }

  TropScalar oplus(TropScalar const& a, TropScalar const& b) {
    return a < b ? b : a;
  }

  TropScalar otimes(TropScalar const& a, TropScalar const& b) {
    if (a.is_bottom() || b.is_bottom()) {
      return TropScalar::bottom();
    }
    return TropScalar(Rational(a.value() + b.value()));
  }

  ////////////////////////////////////////////////////////////////////////
  // ProjPoint
  ////////////////////////////////////////////////////////////////////////

  ProjPoint::ProjPoint(Rational value)
      : _kind(Kind::finite), _value(std::move(value)) {
    _value.canonicalize();
  }

  ProjPoint::ProjPoint(long value) : _kind(Kind::finite), _value(value) {}

  Rational const& ProjPoint::value() const {
    if (_kind != Kind::finite) {
      throw DomainError("ProjPoint::value: infinite point has no rational value");
    }
    return _value;
  }

  bool operator==(ProjPoint const& x, ProjPoint const& y) {
    return x._kind == y._kind
           && (x._kind != ProjPoint::Kind::finite || x._value == y._value);
  }

  std::strong_ordering operator<=>(ProjPoint const& x, ProjPoint const& y) {
    if (x._kind != y._kind) {
      return static_cast<int>(x._kind) <=> static_cast<int>(y._kind);
    }
    if (x._kind != ProjPoint::Kind::finite) {
      return std::strong_ordering::equal;
    }
    return compare(x._value, y._value);
  }

  ProjPoint negate(ProjPoint const& x) {
    switch (x.kind()) {
      case ProjPoint::Kind::neg_inf:
        return ProjPoint::pos_inf();
      case ProjPoint::Kind::pos_inf:
        return ProjPoint::neg_inf();
      default:
        return ProjPoint(Rational(-x.value()));
    }
  }

  TropScalar to_tropical(ProjPoint const& p) {
    switch (p.kind()) {
      case ProjPoint::Kind::pos_inf:
        throw DomainError("to_tropical: +inf is not in the tropical semiring");
      case ProjPoint::Kind::neg_inf:
        return TropScalar::bottom();
      default:
        return TropScalar(p.value());
    }
  }

  TropScalar neg_tropical(ProjPoint const& p) {
    return to_tropical(negate(p));
  }

  ProjPoint ext_sub(TropScalar const& a, TropScalar const& b) {
    if (a.is_bottom() && b.is_bottom()) {
      throw DomainError("ext_sub: (-inf) - (-inf) is undefined");
    }
    if (b.is_bottom()) {
      return ProjPoint::pos_inf();
    }
    if (a.is_bottom()) {
      return ProjPoint::neg_inf();
    }
    return ProjPoint(Rational(a.value() - b.value()));
  }

  ////////////////////////////////////////////////////////////////////////
  // ExtDistance
  ////////////////////////////////////////////////////////////////////////

  ExtDistance::ExtDistance(Rational value) : _value(std::move(value)) {
    _value->canonicalize();
    if (sgn(*_value) < 0) {
      throw DomainError("ExtDistance: distances are non-negative");
    }
  }

  Rational const& ExtDistance::value() const {
    if (!_value) {
      throw DomainError("ExtDistance::value: distance is infinite");
    }
    return *_value;
  }

  bool operator==(ExtDistance const& x, ExtDistance const& y) {
    return x._value == y._value;
  }

  std::strong_ordering operator<=>(ExtDistance const& x, ExtDistance const& y) {
    if (x.is_infinite() || y.is_infinite()) {
      return x.is_infinite() <=> y.is_infinite();
    }
    return compare(*x._value, *y._value);
  }

  ExtDistance operator+(ExtDistance const& x, ExtDistance const& y) {
    if (x.is_infinite() || y.is_infinite()) {
      return ExtDistance::infinite();
    }
    return ExtDistance(Rational(x.value() + y.value()));
  }

  ExtDistance delta(ProjPoint const& x, ProjPoint const& y) {
    if (x.is_finite() && y.is_finite()) {
      return ExtDistance(Rational(abs(y.value() - x.value())));
    }
    if (x.kind() == y.kind()) {
      return ExtDistance(Rational(0));
    }
    return ExtDistance::infinite();
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(TropScalar const& x) {
    return x.is_bottom() ? "-inf" : to_string(x.value());
  }

  std::string to_string(ProjPoint const& x) {
    switch (x.kind()) {
      case ProjPoint::Kind::neg_inf:
        return "-inf";
      case ProjPoint::Kind::pos_inf:
        return "+inf";
      default:
        return to_string(x.value());
    }
  }

  std::string to_string(ExtDistance const& x) {
    return x.is_infinite() ? "inf" : to_string(x.value());
  }

  TropScalar parse_scalar(std::string_view token) {
    if (token == "-inf") {
      return TropScalar::bottom();
    }
    if (token == "+inf") {
      throw ParseError("+inf is not an element of the tropical semiring", 0);
    }
    return TropScalar(parse_rational(token));
  }

  ProjPoint parse_proj_point(std::string_view token) {
    if (token == "-inf") {
      return ProjPoint::neg_inf();
    }
    if (token == "+inf") {
      return ProjPoint::pos_inf();
    }
    return ProjPoint(parse_rational(token));
  }

}  // namespace tropmono

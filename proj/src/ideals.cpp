#include "tropmono/ideals.hpp"

#include <algorithm>

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    // Position in the inclusion order: (tier, width, closed-at-width).
    struct OrderKey {
      int      tier;
      Rational width;
      int      closed;
    };

    OrderKey order_key(IdealDescriptor const& d) {
      switch (d.kind()) {
        case IdealDescriptor::Kind::open_finite:
          return {2, d.open_width(), 0};
        case IdealDescriptor::Kind::open_line:
          return {3, Rational(0), 0};
        default:
          break;
      }
      IsoType const& t = d.closed_type();
      switch (t.kind()) {
        case IsoType::Kind::empty:
          return {0, Rational(0), 0};
        case IsoType::Kind::singleton:
          return {1, Rational(0), 0};
        case IsoType::Kind::finite_interval:
          return {2, t.length(), 1};
        case IsoType::Kind::half_infinite:
          return {4, Rational(0), 0};
        default:
          return {5, Rational(0), 0};
      }
    }
  }  // namespace

  IdealDescriptor IdealDescriptor::open_finite(Rational w) {
    w.canonicalize();
    if (sgn(w) <= 0) {
      throw DomainError("IdealDescriptor::open_finite: width must be positive");
    }
    return IdealDescriptor(Kind::open_finite, IsoType::empty(), std::move(w));
  }

  IsoType const& IdealDescriptor::closed_type() const {
    if (_kind != Kind::closed) {
      throw DomainError("IdealDescriptor::closed_type: descriptor is open");
    }
    return _type;
  }

  Rational const& IdealDescriptor::open_width() const {
    if (_kind != Kind::open_finite) {
      throw DomainError("IdealDescriptor::open_width: not a finite open interval");
    }
    return _width;
  }

  bool operator==(IdealDescriptor const& x, IdealDescriptor const& y) {
    return ideal_compare(x, y) == std::strong_ordering::equal;
  }

  bool ideal_contains(IdealDescriptor const& d, TropMatrix const& a) {
    IsoType const t = iso_type(proj_column_space(a));
    switch (d.kind()) {
      case IdealDescriptor::Kind::closed:
        return embeds_isometrically(t, d.closed_type());
      case IdealDescriptor::Kind::open_finite:
        if (t.kind() == IsoType::Kind::finite_interval) {
          return t.length() < d.open_width();
        }
        return t.kind() == IsoType::Kind::empty
               || t.kind() == IsoType::Kind::singleton;
      default:
        return t.kind() == IsoType::Kind::empty
               || t.kind() == IsoType::Kind::singleton
               || t.kind() == IsoType::Kind::finite_interval;
    }
  }

  IdealDescriptor principal_ideal_of(TropMatrix const& b) {
    return IdealDescriptor::closed(iso_type(proj_column_space(b)));
  }

  std::strong_ordering ideal_compare(IdealDescriptor const& x,
                                     IdealDescriptor const& y) {
    OrderKey const kx = order_key(x), ky = order_key(y);
    if (kx.tier != ky.tier) {
      return kx.tier <=> ky.tier;
    }
    if (int c = cmp(kx.width, ky.width); c != 0) {
      return c <=> 0;
    }
    return kx.closed <=> ky.closed;
  }

  IdealDescriptor ideal_from_generators(std::span<TropMatrix const> gens) {
    if (gens.empty()) {
      throw DomainError("ideal_from_generators: no generators");
    }
    IsoType best = IsoType::empty();
    for (auto const& g : gens) {
      best = std::max(best, iso_type(proj_column_space(g)));
    }
    return IdealDescriptor::closed(best);
  }

  bool is_principal(IdealDescriptor const& d) {
    return d.is_closed();
  }

  std::pair<IdealDescriptor, std::optional<IsoType>>
  decompose(IdealDescriptor const& d) {
    switch (d.kind()) {
      case IdealDescriptor::Kind::open_finite: {
        IsoType t = IsoType::finite_interval(d.open_width());
        return {IdealDescriptor::closed(t), t};
      }
      case IdealDescriptor::Kind::open_line:
        return {IdealDescriptor::closed(IsoType::half_infinite()),
                IsoType::half_infinite()};
      default:
        return {d, std::nullopt};
    }
  }

  std::string to_string(IdealDescriptor const& d) {
    switch (d.kind()) {
      case IdealDescriptor::Kind::open_finite:
        return "open:" + to_string(d.open_width());
      case IdealDescriptor::Kind::open_line:
        return "openline";
      default:
        return "closed:" + to_string(d.closed_type());
    }
  }

  IdealDescriptor parse_descriptor(std::string_view text) {
    auto width_at = [&](std::size_t pos) {
      try {
        return parse_rational(text.substr(pos));
      } catch (ParseError const& e) {
        throw ParseError("bad width", pos + e.position());
      }
    };
    auto positive = [&](Rational w, std::size_t pos) {
      if (sgn(w) <= 0) {
        throw ParseError("width must be positive", pos);
      }
      return w;
    };
    if (text == "openline") {
      return IdealDescriptor::open_line();
    }
    constexpr std::string_view open = "open:";
    if (text.starts_with(open)) {
      return IdealDescriptor::open_finite(
          positive(width_at(open.size()), open.size()));
    }
    constexpr std::string_view closed = "closed:";
    if (!text.starts_with(closed)) {
      throw ParseError("expected 'closed:', 'open:' or 'openline'", 0);
    }
    std::string_view rest = text.substr(closed.size());
    if (rest == "empty") {
      return IdealDescriptor::closed(IsoType::empty());
    } else if (rest == "point") {
      return IdealDescriptor::closed(IsoType::singleton());
    } else if (rest == "halfinf") {
      return IdealDescriptor::closed(IsoType::half_infinite());
    } else if (rest == "fullline") {
      return IdealDescriptor::closed(IsoType::full_line());
    }
    constexpr std::string_view interval = "interval:";
    if (rest.starts_with(interval)) {
      std::size_t pos = closed.size() + interval.size();
      return IdealDescriptor::closed(
          IsoType::finite_interval(positive(width_at(pos), pos)));
    }
    throw ParseError(
        "expected one of empty, point, interval:<d>, halfinf, fullline",
        closed.size());
  }

}  // namespace tropmono

#include "tropmono/matrix.hpp"

#include <algorithm>
#include <utility>

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    void require_same_dim(std::size_t n, std::size_t m, char const* where) {
      if (n != m) {
        throw DomainError(std::string(where) + ": dimension mismatch ("
                          + std::to_string(n) + " vs " + std::to_string(m)
                          + ")");
      }
    }

    // a ⊗ x over the completed carrier, with (-inf) ⊗ (+inf) = -inf.
    ResidualEntry completed_mul(TropScalar const& a, ResidualEntry const& x) {
      if (a.is_bottom()) {
        return TropScalar::bottom();
      }
      if (x.is_top()) {
        return ResidualEntry::top();
      }
      return otimes(a, x.scalar());
    }

    ResidualEntry completed_max(ResidualEntry const& x, ResidualEntry const& y) {
      return x < y ? y : x;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // TropVector
  ////////////////////////////////////////////////////////////////////////

  TropVector::TropVector(std::size_t n) : _entries(n) {
    if (n == 0) {
      throw DomainError("TropVector: dimension must be positive");
    }
  }

  TropVector::TropVector(std::initializer_list<TropScalar> entries)
      : TropVector(std::vector<TropScalar>(entries)) {}

  TropVector::TropVector(std::vector<TropScalar> entries)
      : _entries(std::move(entries)) {
    if (_entries.empty()) {
      throw DomainError("TropVector: dimension must be positive");
    }
  }

  bool TropVector::is_zero() const {
    return std::all_of(_entries.cbegin(), _entries.cend(), [](auto const& x) {
      return x.is_bottom();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // TropMatrix
  ////////////////////////////////////////////////////////////////////////

  TropMatrix::TropMatrix(std::size_t n) : _n(n), _entries(n * n) {
    if (n == 0) {
      throw DomainError("TropMatrix: dimension must be positive");
    }
  }

  TropMatrix::TropMatrix(
      std::initializer_list<std::initializer_list<TropScalar>> rows)
      : TropMatrix(std::vector<std::vector<TropScalar>>(rows.begin(),
                                                        rows.end())) {}

  TropMatrix::TropMatrix(std::vector<std::vector<TropScalar>> const& rows)
      : _n(rows.size()), _entries() {
    if (_n == 0) {
      throw DomainError("TropMatrix: dimension must be positive");
    }
    _entries.reserve(_n * _n);
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw DomainError("TropMatrix: rows must form a square, expected "
                          + std::to_string(_n) + " entries per row, found "
                          + std::to_string(row.size()));
      }
      _entries.insert(_entries.end(), row.begin(), row.end());
    }
  }

  TropMatrix TropMatrix::identity(std::size_t n) {
    TropMatrix id(n);
    for (std::size_t i = 0; i < n; ++i) {
      id(i, i) = TropScalar(0L);
    }
    return id;
  }

  TropVector TropMatrix::row(std::size_t i) const {
    std::vector<TropScalar> out(_entries.begin() + i * _n,
                                _entries.begin() + (i + 1) * _n);
    return TropVector(std::move(out));
  }

  TropVector TropMatrix::column(std::size_t j) const {
    TropVector out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      out[i] = (*this)(i, j);
    }
    return out;
  }

  bool TropMatrix::is_zero() const {
    return std::all_of(_entries.cbegin(), _entries.cend(), [](auto const& x) {
      return x.is_bottom();
    });
  }

  TropMatrix mat_mul(TropMatrix const& a, TropMatrix const& b) {
    require_same_dim(a.dim(), b.dim(), "mat_mul");
    std::size_t const n = a.dim();
    TropMatrix        out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        TropScalar acc;
        for (std::size_t k = 0; k < n; ++k) {
          acc = oplus(acc, otimes(a(i, k), b(k, j)));
        }
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  TropMatrix mat_add(TropMatrix const& a, TropMatrix const& b) {
    require_same_dim(a.dim(), b.dim(), "mat_add");
    TropMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        out(i, j) = oplus(a(i, j), b(i, j));
      }
    }
    return out;
  }

  TropMatrix transpose(TropMatrix const& a) {
    TropMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        out(j, i) = a(i, j);
      }
    }
    return out;
  }

  bool is_monomial(TropMatrix const& a) {
    std::size_t const        n = a.dim();
    std::vector<std::size_t> in_row(n, 0), in_col(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).is_finite()) {
          ++in_row[i];
          ++in_col[j];
        }
      }
    }
    auto is_one = [](std::size_t c) { return c == 1; };
    return std::all_of(in_row.begin(), in_row.end(), is_one)
           && std::all_of(in_col.begin(), in_col.end(), is_one);
  }

  TropMatrix monomial_inverse(TropMatrix const& a) {
    if (!is_monomial(a)) {
      throw DomainError("monomial_inverse: matrix is not monomial");
    }
    TropMatrix inv(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a(i, j).is_finite()) {
          inv(j, i) = TropScalar(Rational(-a(i, j).value()));
        }
      }
    }
    return inv;
  }

  TropVector mat_vec(TropMatrix const& a, TropVector const& v) {
    require_same_dim(a.dim(), v.dim(), "mat_vec");
    TropVector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        out[i] = oplus(out[i], otimes(a(i, k), v[k]));
      }
    }
    return out;
  }

  TropVector scale(TropScalar const& lambda, TropVector const& v) {
    TropVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
      out[i] = otimes(lambda, v[i]);
    }
    return out;
  }

  bool entrywise_leq(TropMatrix const& a, TropMatrix const& b) {
    require_same_dim(a.dim(), b.dim(), "entrywise_leq");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a(i, j) > b(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // ResidualEntry / ResidualMatrix
  ////////////////////////////////////////////////////////////////////////

  TropScalar const& ResidualEntry::scalar() const {
    if (_top) {
      throw DomainError("ResidualEntry::scalar: entry is +inf");
    }
    return _scalar;
  }

  bool operator==(ResidualEntry const& x, ResidualEntry const& y) {
    return x._top == y._top && (x._top || x._scalar == y._scalar);
  }

  std::strong_ordering operator<=>(ResidualEntry const& x,
                                   ResidualEntry const& y) {
    if (x._top || y._top) {
      return x._top <=> y._top;
    }
    return x._scalar <=> y._scalar;
  }

  std::string to_string(ResidualEntry const& x) {
    return x.is_top() ? "+inf" : to_string(x.scalar());
  }

  ResidualMatrix::ResidualMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _entries(rows * cols, TropScalar::bottom()) {}

  bool ResidualMatrix::has_top() const {
    return std::any_of(_entries.cbegin(), _entries.cend(), [](auto const& x) {
      return x.is_top();
    });
  }

  ResidualEntry residuate(ResidualEntry const& a, TropScalar const& b) {
    if (b.is_bottom() || a.is_top()) {
      return ResidualEntry::top();
    }
    if (a.scalar().is_bottom()) {
      return TropScalar::bottom();
    }
    return TropScalar(Rational(a.scalar().value() - b.value()));
  }

  namespace {
    ResidualMatrix left_residual_impl(TropMatrix const&     b,
                                      ResidualMatrix const& a) {
      std::size_t const n = b.dim();
      require_same_dim(n, a.rows(), "left_residual");
      ResidualMatrix x(n, a.cols());
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          ResidualEntry best = ResidualEntry::top();
          for (std::size_t i = 0; i < n; ++i) {
            best = std::min(best, residuate(a(i, j), b(i, k)));
          }
          x(k, j) = std::move(best);
        }
      }
      return x;
    }
  }  // namespace

  ResidualMatrix left_residual(TropMatrix const& b, TropMatrix const& a) {
    require_same_dim(b.dim(), a.dim(), "left_residual");
    return left_residual_impl(b, to_residual(a));
  }

  ResidualMatrix left_residual(TropMatrix const& b, TropVector const& v) {
    require_same_dim(b.dim(), v.dim(), "left_residual");
    return left_residual_impl(b, to_residual(v));
  }

  ResidualMatrix right_residual(ResidualMatrix const& c, TropMatrix const& a) {
    std::size_t const n = a.dim();
    require_same_dim(n, c.cols(), "right_residual");
    ResidualMatrix y(c.rows(), n);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        ResidualEntry best = ResidualEntry::top();
        for (std::size_t j = 0; j < n; ++j) {
          best = std::min(best, residuate(c(i, j), a(k, j)));
        }
        y(i, k) = std::move(best);
      }
    }
    return y;
  }

  ResidualMatrix right_residual(TropMatrix const& c, TropMatrix const& a) {
    require_same_dim(c.dim(), a.dim(), "right_residual");
    return right_residual(to_residual(c), a);
  }

  ResidualMatrix mat_mul(TropMatrix const& a, ResidualMatrix const& x) {
    require_same_dim(a.dim(), x.rows(), "mat_mul");
    ResidualMatrix out(a.dim(), x.cols());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) {
        ResidualEntry acc = TropScalar::bottom();
        for (std::size_t k = 0; k < a.dim(); ++k) {
          acc = completed_max(acc, completed_mul(a(i, k), x(k, j)));
        }
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  ResidualMatrix mat_mul(ResidualMatrix const& x, TropMatrix const& a) {
    require_same_dim(x.cols(), a.dim(), "mat_mul");
    ResidualMatrix out(x.rows(), a.dim());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        ResidualEntry acc = TropScalar::bottom();
        for (std::size_t k = 0; k < x.cols(); ++k) {
          acc = completed_max(acc, completed_mul(a(k, j), x(i, k)));
        }
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  ResidualMatrix to_residual(TropMatrix const& a) {
    ResidualMatrix out(a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        out(i, j) = a(i, j);
      }
    }
    return out;
  }

  ResidualMatrix to_residual(TropVector const& v) {
    ResidualMatrix out(v.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      out(i, 0) = v[i];
    }
    return out;
  }

  TropMatrix materialize(ResidualMatrix const& x) {
    require_same_dim(x.rows(), x.cols(), "materialize");
    TropMatrix out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) {
        out(i, j) = x(i, j).is_top() ? TropScalar(0L) : x(i, j).scalar();
      }
    }
    return out;
  }

  bool solves_right(TropMatrix const& b, TropMatrix const& a) {
    return mat_mul(b, left_residual(b, a)) == to_residual(a);
  }

  std::optional<TropMatrix> solve_right(TropMatrix const& b,
                                        TropMatrix const& a) {
    if (!solves_right(b, a)) {
      return std::nullopt;
    }
    TropMatrix x = materialize(left_residual(b, a));
    if (mat_mul(b, x) != a) {
      throw VerificationFailure("solve_right: materialized witness fails");
    }
    return x;
  }

  std::optional<TropMatrix> solve_left(TropMatrix const& b,
                                       TropMatrix const& a) {
    auto xt = solve_right(transpose(b), transpose(a));
    if (!xt) {
      return std::nullopt;
    }
    return transpose(*xt);
  }

}  // namespace tropmono

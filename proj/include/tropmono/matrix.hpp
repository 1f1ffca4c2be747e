// Square max-plus matrices and vectors of any dimension, together with the
// residuation (left/right division) used to decide solvability of A = BX.

#ifndef TROPMONO_MATRIX_HPP_
#define TROPMONO_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tropmono/scalar.hpp"

namespace tropmono {

  class TropVector {
   public:
    // The zero vector (all -inf) of length n.
    explicit TropVector(std::size_t n);
    TropVector(std::initializer_list<TropScalar> entries);
    explicit TropVector(std::vector<TropScalar> entries);

    std::size_t dim() const noexcept {
      return _entries.size();
    }

    TropScalar const& operator[](std::size_t i) const {
      return _entries[i];
    }

    TropScalar& operator[](std::size_t i) {
      return _entries[i];
    }

    bool is_zero() const;

    friend bool operator==(TropVector const&, TropVector const&) = default;

   private:
    std::vector<TropScalar> _entries;
  };

  class TropMatrix {
   public:
    // The n × n zero matrix (all -inf).
    explicit TropMatrix(std::size_t n);
    // Row-major; throws DomainError unless the rows form a non-empty square.
    TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows);
    explicit TropMatrix(std::vector<std::vector<TropScalar>> const& rows);

    static TropMatrix identity(std::size_t n);
    static TropMatrix zero(std::size_t n) {
      return TropMatrix(n);
    }

    std::size_t dim() const noexcept {
      return _n;
    }

    TropScalar const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _n + j];
    }

    TropScalar& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _n + j];
    }

    TropVector row(std::size_t i) const;
    TropVector column(std::size_t j) const;
    bool       is_zero() const;

    friend bool operator==(TropMatrix const&, TropMatrix const&) = default;

   private:
    std::size_t             _n;
    std::vector<TropScalar> _entries;
  };

  TropMatrix mat_mul(TropMatrix const& a, TropMatrix const& b);
  TropMatrix mat_add(TropMatrix const& a, TropMatrix const& b);
  TropMatrix transpose(TropMatrix const& a);

  // Exactly one finite entry in every row and every column; these are the
  // units of the multiplicative monoid.
  bool is_monomial(TropMatrix const& a);

  // Negate the finite entries and transpose the pattern. Throws DomainError
  // if `a` is not monomial.
  TropMatrix monomial_inverse(TropMatrix const& a);

  TropVector mat_vec(TropMatrix const& a, TropVector const& v);
  TropVector scale(TropScalar const& lambda, TropVector const& v);

  // Entrywise order.
  bool entrywise_leq(TropMatrix const& a, TropMatrix const& b);

  ////////////////////////////////////////////////////////////////////////
  // Residuation
  ////////////////////////////////////////////////////////////////////////

  // Element of the completed carrier R ∪ {-inf, +inf}. +inf only arises as
  // the value of an unconstrained residual; in products the convention
  // (-inf) ⊗ (+inf) = -inf applies.
  class ResidualEntry {
   public:
    ResidualEntry(TropScalar x) : _scalar(std::move(x)), _top(false) {}  // NOLINT

    static ResidualEntry top() {
      ResidualEntry e{TropScalar::bottom()};
      e._top = true;
      return e;
    }

    bool is_top() const noexcept {
      return _top;
    }

    // Throws DomainError for +inf.
    TropScalar const& scalar() const;

    friend bool operator==(ResidualEntry const& x, ResidualEntry const& y);
    friend std::strong_ordering operator<=>(ResidualEntry const& x,
                                            ResidualEntry const& y);

   private:
    TropScalar _scalar;
    bool       _top;
  };

  std::string to_string(ResidualEntry const& x);

  // Rectangular rows × cols grid over the completed carrier.
  class ResidualMatrix {
   public:
    ResidualMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept {
      return _rows;
    }

    std::size_t cols() const noexcept {
      return _cols;
    }

    ResidualEntry const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    ResidualEntry& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }

    bool has_top() const;

    friend bool operator==(ResidualMatrix const&, ResidualMatrix const&)
        = default;

   private:
    std::size_t                _rows;
    std::size_t                _cols;
    std::vector<ResidualEntry> _entries;
  };

  // Largest t in the completed carrier with b ⊗ t ≤ a.
  ResidualEntry residuate(ResidualEntry const& a, TropScalar const& b);

  // The greatest X with B ⊗ X ≤ A entrywise: X_kj = min_i (A_ij ⊘ B_ik).
  ResidualMatrix left_residual(TropMatrix const& b, TropMatrix const& a);
  // Column form of the above: greatest x with B ⊗ x ≤ v.
  ResidualMatrix left_residual(TropMatrix const& b, TropVector const& v);
  // The greatest Y with Y ⊗ A ≤ C entrywise: Y_ik = min_j (C_ij ⊘ A_kj).
  ResidualMatrix right_residual(ResidualMatrix const& c, TropMatrix const& a);
  ResidualMatrix right_residual(TropMatrix const& c, TropMatrix const& a);

  // Product over the completed carrier; the result may contain +inf only
  // where a finite entry of `a` meets a +inf entry of `x`.
  ResidualMatrix mat_mul(TropMatrix const& a, ResidualMatrix const& x);
  ResidualMatrix mat_mul(ResidualMatrix const& x, TropMatrix const& a);

  ResidualMatrix to_residual(TropMatrix const& a);
  ResidualMatrix to_residual(TropVector const& v);

  // Replaces every +inf entry by 0, giving a matrix over R̄. Requires a
  // square residual.
  TropMatrix materialize(ResidualMatrix const& x);

  // A = B ⊗ X has a solution X over R̄.
  bool solves_right(TropMatrix const& b, TropMatrix const& a);
  // A concrete X with B ⊗ X = A, or nullopt.
  std::optional<TropMatrix> solve_right(TropMatrix const& b,
                                        TropMatrix const& a);
  // A concrete X with X ⊗ B = A, or nullopt.
  std::optional<TropMatrix> solve_left(TropMatrix const& b,
                                       TropMatrix const& a);

}  // namespace tropmono

#endif  // TROPMONO_MATRIX_HPP_

#ifndef TRIMAT_BOOLMAT_HPP_
#define TRIMAT_BOOLMAT_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trimat {

/// Square Boolean matrix with entrywise max as addition and min as
/// multiplication of entries. Rows are bit-packed into machine words, so the
/// dimension is capped at 64. Values are immutable in spirit: every operation
/// returns a fresh matrix, and the mutating helpers exist only to let hot
/// loops reuse storage.
class BoolMatrix {
 public:
  static constexpr int max_dim = 64;

  /// The n-by-n zero matrix.
  explicit BoolMatrix(int n);

  static BoolMatrix identity(int n);

  /// The (i,j)-th matrix unit: a single 1 at row i, column j (1-based).
  static BoolMatrix unit(int n, int i, int j);

  /// Parses the literal format used by tests and the CLI: rows separated by
  /// `;`, entries by spaces, e.g. "1 1 0; 0 0 1; 0 0 1".
  static BoolMatrix parse(std::string_view text);

  int dim() const { return n_; }

  /// Entry access, 1-based as in the usual (i,j) matrix indexing.
  bool get(int i, int j) const;
  void set(int i, int j, bool value);

  /// Raw bits of a row, 0-based; bit j holds entry (i+1, j+1).
  std::uint64_t row_bits(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_unitriangular() const;
  bool is_idempotent() const;

  std::string to_string() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  /// Lexicographic order on (dim, rows); used for deterministic containers,
  /// not the semiring order (see `le`).
  friend std::strong_ordering operator<=>(const BoolMatrix&, const BoolMatrix&) = default;

  friend BoolMatrix operator+(const BoolMatrix& a, const BoolMatrix& b);
  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);
  friend void add_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out);
  friend void mul_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out);
  friend bool le(const BoolMatrix& a, const BoolMatrix& b);

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Entrywise max (Boolean OR) of two matrices of equal dimension.
BoolMatrix operator+(const BoolMatrix& a, const BoolMatrix& b);

/// Boolean matrix product: OR over k of (a_ik AND b_kj).
BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);

/// In-place variants for hot loops; `out` must already have the right
/// dimension and, for mul_into, must not alias `a` or `b`.
void add_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out);
void mul_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out);

/// The natural semiring order: a <= b iff a + b == b, i.e. the 1-positions of
/// a are a subset of those of b.
bool le(const BoolMatrix& a, const BoolMatrix& b);

std::ostream& operator<<(std::ostream& os, const BoolMatrix& m);

enum class SpaceKind { triangular, unitriangular, full };

std::string_view to_string(SpaceKind kind);

inline constexpr std::uint64_t default_space_cap = std::uint64_t{1} << 24;

/// A finite carrier set of Boolean matrices, addressable by index so nothing
/// is materialized: all upper triangular, upper unitriangular, or arbitrary
/// n-by-n matrices. Enumeration order is fixed (index 0, 1, 2, ...), with the
/// free positions of the matrix filled row-major from the low bits of the
/// index. Construction refuses spaces larger than `cap`.
class MatrixSpace {
 public:
  MatrixSpace(SpaceKind kind, int n, std::uint64_t cap = default_space_cap);

  std::uint64_t size() const { return std::uint64_t{1} << free_positions_.size(); }
  int dim() const { return n_; }
  SpaceKind kind() const { return kind_; }

  BoolMatrix operator[](std::uint64_t index) const;

  class iterator {
   public:
    using value_type = BoolMatrix;
    using difference_type = std::int64_t;

    iterator(const MatrixSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    BoolMatrix operator*() const { return (*space_)[index_]; }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { iterator old = *this; ++index_; return old; }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    const MatrixSpace* space_;
    std::uint64_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  SpaceKind kind_;
  int n_;
  bool unit_diagonal_;
  std::vector<std::pair<int, int>> free_positions_;  // 0-based (row, col)
};

}  // namespace trimat

#endif  // TRIMAT_BOOLMAT_HPP_

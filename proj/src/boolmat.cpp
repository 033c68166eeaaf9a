#include "trimat/boolmat.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trimat {

namespace {

void check_dim(int n) {
  if (n < 1 || n > BoolMatrix::max_dim) {
    throw std::invalid_argument("BoolMatrix: dimension must be in [1, 64], got " +
                                std::to_string(n));
  }
}

void check_same_dim(const BoolMatrix& a, const BoolMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

BoolMatrix::BoolMatrix(int n) : n_(n) {
  check_dim(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.rows_[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  }
  return m;
}

BoolMatrix BoolMatrix::unit(int n, int i, int j) {
  BoolMatrix m(n);
  m.set(i, j, true);
  return m;
}

BoolMatrix BoolMatrix::parse(std::string_view text) {
  std::vector<std::vector<bool>> rows;
  std::string row_text;
  std::istringstream lines{std::string(text)};
  while (std::getline(lines, row_text, ';')) {
    std::istringstream entries(row_text);
    std::vector<bool> row;
    std::string tok;
    while (entries >> tok) {
      if (tok == "0") {
        row.push_back(false);
      } else if (tok == "1") {
        row.push_back(true);
      } else {
        throw std::invalid_argument("BoolMatrix::parse: entry must be 0 or 1, got '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument("BoolMatrix::parse: empty literal");
  }
  const int n = static_cast<int>(rows.size());
  check_dim(n);
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("BoolMatrix::parse: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      m.set(i + 1, j + 1, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

bool BoolMatrix::get(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::invalid_argument("BoolMatrix::get: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for dimension " +
                                std::to_string(n_));
  }
  return (rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1;
}

void BoolMatrix::set(int i, int j, bool value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::invalid_argument("BoolMatrix::set: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for dimension " +
                                std::to_string(n_));
  }
  const std::uint64_t bit = std::uint64_t{1} << (j - 1);
  if (value) {
    rows_[static_cast<std::size_t>(i - 1)] |= bit;
  } else {
    rows_[static_cast<std::size_t>(i - 1)] &= ~bit;
  }
}

bool BoolMatrix::is_zero() const {
  for (std::uint64_t row : rows_) {
    if (row != 0) return false;
  }
  return true;
}

bool BoolMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t below = (std::uint64_t{1} << i) - 1;
    if (rows_[static_cast<std::size_t>(i)] & below) return false;
  }
  return true;
}

bool BoolMatrix::is_unitriangular() const {
  if (!is_upper_triangular()) return false;
  for (int i = 0; i < n_; ++i) {
    if (!((rows_[static_cast<std::size_t>(i)] >> i) & 1)) return false;
  }
  return true;
}

bool BoolMatrix::is_idempotent() const { return *this * *this == *this; }

std::string BoolMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out += "; ";
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ' ';
      out += ((rows_[static_cast<std::size_t>(i)] >> j) & 1) ? '1' : '0';
    }
  }
  return out;
}

BoolMatrix operator+(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b, "mat_add");
  BoolMatrix out(a.n_);
  add_into(a, b, out);
  return out;
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b, "mat_mul");
  BoolMatrix out(a.n_);
  mul_into(a, b, out);
  return out;
}

void add_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out) {
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    out.rows_[i] = a.rows_[i] | b.rows_[i];
  }
}

void mul_into(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out) {
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    std::uint64_t picks = a.rows_[i];
    std::uint64_t acc = 0;
    while (picks != 0) {
      acc |= b.rows_[static_cast<std::size_t>(std::countr_zero(picks))];
      picks &= picks - 1;
    }
    out.rows_[i] = acc;
  }
}

bool le(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b, "le");
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if ((a.rows_[i] | b.rows_[i]) != b.rows_[i]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const BoolMatrix& m) { return os << m.to_string(); }

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::triangular: return "triangular";
    case SpaceKind::unitriangular: return "unitriangular";
    case SpaceKind::full: return "full";
  }
  return "?";
}

MatrixSpace::MatrixSpace(SpaceKind kind, int n, std::uint64_t cap) : kind_(kind), n_(n) {
  check_dim(n);
  unit_diagonal_ = (kind == SpaceKind::unitriangular);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool free = kind == SpaceKind::full ? true
                        : kind == SpaceKind::triangular ? j >= i
                                                        : j > i;
      if (free) free_positions_.emplace_back(i, j);
    }
  }
  const std::size_t bits = free_positions_.size();
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap) {
    throw std::length_error("MatrixSpace: " + std::string(to_string(kind)) + " space of dimension " +
                            std::to_string(n) + " has 2^" + std::to_string(bits) +
                            " elements, above the cap of " + std::to_string(cap));
  }
}

BoolMatrix MatrixSpace::operator[](std::uint64_t index) const {
  if (index >= size()) {
    throw std::invalid_argument("MatrixSpace: index " + std::to_string(index) +
                                " out of range for space of size " + std::to_string(size()));
  }
  BoolMatrix m = unit_diagonal_ ? BoolMatrix::identity(n_) : BoolMatrix(n_);
  for (std::size_t b = 0; b < free_positions_.size(); ++b) {
    if ((index >> b) & 1) {
      m.set(free_positions_[b].first + 1, free_positions_[b].second + 1, true);
    }
  }
  return m;
}

}  // namespace trimat

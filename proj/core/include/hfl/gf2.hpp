#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hfl {

/// Dense GF(2) matrix with bit-packed rows; just enough surface for
/// boundary-rank extraction.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  void set(std::size_t row, std::size_t col);
  void flip(std::size_t row, std::size_t col);
  bool get(std::size_t row, std::size_t col) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Rank by row-reduction with first-nonzero pivoting. Destructive.
  std::size_t rank_destructive();

  /// y += row (mod 2) into an external bit vector of matching width.
  void xor_row_into(std::size_t row, std::vector<std::uint64_t>& acc) const;

private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace hfl

#include "hfl/gf2.hpp"

#include <bit>
#include <cassert>

namespace hfl {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  bits_.assign(rows_ * words_, 0);
}

void Gf2Matrix::set(std::size_t row, std::size_t col) {
  bits_[row * words_ + col / 64] |= std::uint64_t(1) << (col % 64);
}

void Gf2Matrix::flip(std::size_t row, std::size_t col) {
  bits_[row * words_ + col / 64] ^= std::uint64_t(1) << (col % 64);
}

bool Gf2Matrix::get(std::size_t row, std::size_t col) const {
  return (bits_[row * words_ + col / 64] >> (col % 64)) & 1;
}

void Gf2Matrix::xor_row_into(std::size_t row,
                             std::vector<std::uint64_t>& acc) const {
  assert(acc.size() == words_);
  const std::uint64_t* r = bits_.data() + row * words_;
  for (std::size_t w = 0; w < words_; ++w) acc[w] ^= r[w];
}

std::size_t Gf2Matrix::rank_destructive() {
  if (rows_ == 0 || cols_ == 0) return 0;
  // pivot_of[col]: row index owning the pivot in that column, or npos.
  constexpr std::size_t npos = std::size_t(-1);
  std::vector<std::size_t> pivot_of(cols_, npos);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* row = bits_.data() + r * words_;
    std::size_t lead = npos;
    for (std::size_t w = 0; w < words_; ++w) {
      if (row[w] == 0) continue;
      lead = w * 64 + std::size_t(std::countr_zero(row[w]));
      if (pivot_of[lead] == npos) break;
      const std::uint64_t* p = bits_.data() + pivot_of[lead] * words_;
      for (std::size_t k = w; k < words_; ++k) row[k] ^= p[k];
      lead = npos;
      --w;  // re-scan the current word after cancellation
    }
    if (lead != npos) {
      pivot_of[lead] = r;
      ++rank;
    }
  }
  return rank;
}

}  // namespace hfl

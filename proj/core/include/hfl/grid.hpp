#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "hfl/errors.hpp"

namespace hfl {

using Perm = std::vector<std::uint8_t>;

/// Largest grid size supported by the packed state encoding (4 bits/entry).
inline constexpr int kMaxGridSize = 16;

/// One of the N! generator configurations of a size-N grid: the point in
/// column i sits in row `row(i)`. Packed into a single word so that tens of
/// millions of states stay cheap to store and compare.
class GridState {
public:
  GridState() = default;

  static GridState from_perm(std::span<const std::uint8_t> perm);

  int row(int col) const { return int((bits_ >> (4 * col)) & 0xF); }

  Perm to_perm(int size) const;

  /// State with the rows of columns i and j exchanged.
  GridState transposed(int i, int j) const;

  std::uint64_t packed() const { return bits_; }
  static GridState from_packed(std::uint64_t bits) {
    GridState s;
    s.bits_ = bits;
    return s;
  }

  friend auto operator<=>(const GridState&, const GridState&) = default;

private:
  std::uint64_t bits_ = 0;
};

/// An N x N grid diagram: one O and one X marking per row and per column.
/// The O of column i sits in row o_perm[i], the X in row x_perm[i]
/// (markings live at cell centers (i+1/2, row+1/2); state points at integer
/// lattice points). Link components are the cycles of the O/X walk, labeled
/// in order of their smallest column.
struct GridDiagram {
  int size = 0;  // N
  Perm o_perm;
  Perm x_perm;
  std::vector<int> component_of_col;  // column -> component label
  std::vector<int> o_count;           // markings per component (n_i)
  int components = 0;                 // l
  bool reflected = false;             // set if a chirality fix was applied

  GridDiagram(int size, Perm o, Perm x);

  int component_of_row(int row) const;
};

/// Grid presenting the (n, sn) torus link: N = n(s+1), O markings on the
/// main diagonal, X markings shifted by s*n. s = 1 gives T(n,n).
GridDiagram torus_grid(int n, int multiplier = 1);

/// Pairwise linking numbers from signed crossings of the planar grid
/// realization (vertical segments over horizontal). Diagonal entries zero.
std::vector<std::vector<int>> linking_matrix(const GridDiagram& g);

/// Number of states of g, i.e. size!.
std::uint64_t state_count(const GridDiagram& g);

/// Iterates the N! grid states in lexicographic order of the underlying
/// permutation. Single-pass input range.
class StateRange {
public:
  explicit StateRange(int size) : size_(size) {}

  class iterator {
  public:
    using value_type = GridState;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int size, bool at_end);

    GridState operator*() const { return state_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.state_ == b.state_);
    }

  private:
    Perm perm_;
    GridState state_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(size_, false); }
  iterator end() const { return iterator(size_, true); }

private:
  int size_;
};

inline StateRange enumerate_states(const GridDiagram& g) {
  return StateRange(g.size);
}

/// Permutation with exactly `rank` lexicographic predecessors (factorial
/// number system). Used to split the enumeration across workers.
Perm nth_permutation(int size, std::uint64_t rank);

/// A rectangle connecting state x to y = x with columns i, j transposed.
/// Corner columns are i < j and corner rows row_lo < row_hi; the actual
/// spans are those intervals or their complements on the torus, per the
/// outer_* flags.
struct Rectangle {
  std::uint8_t col_lo = 0, col_hi = 0;
  std::uint8_t row_lo = 0, row_hi = 0;
  bool outer_cols = false;
  bool outer_rows = false;

  /// Does the open interior contain the cell center (col+1/2, row+1/2)?
  bool contains_cell(int col, int row) const;
  /// Is the integer lattice point (col, row) strictly interior?
  bool contains_point(int col, int row) const;
};

/// Both rectangles of Rect(x, y) for the transposition of columns i < j.
std::pair<Rectangle, Rectangle> rectangles_for(const GridState& x, int i,
                                               int j);

/// All 2*C(N,2) rectangles leaving x, empty or not, with their targets.
std::vector<std::pair<GridState, Rectangle>> all_rectangles(
    const GridDiagram& g, const GridState& x);

/// Marking/point counts used by the grading rectangle rules.
int o_markings_in(const GridDiagram& g, const Rectangle& r);
int x_markings_in(const GridDiagram& g, const Rectangle& r);
int o_markings_in(const GridDiagram& g, const Rectangle& r, int component);
int x_markings_in(const GridDiagram& g, const Rectangle& r, int component);
int interior_points(const GridState& x, const Rectangle& r, int size);

/// Precomputed pairwise marking counts for one grid; makes per-state
/// grading evaluation cheap enough for full N! sweeps.
class GradingContext {
public:
  explicit GradingContext(const GridDiagram& g);

  const GridDiagram& grid() const { return *grid_; }

  /// Maslov degree M(x) = J(x-O, x-O) + 1 with J the symmetrized
  /// strictly-northeast pair count over the planar fundamental domain.
  int maslov(const GridState& x) const;

  /// Doubled Alexander vector,
  /// A_i(x) = J(x - (X+O)/2, X_i - O_i) - (n_i - 1)/2.
  std::vector<int> alexander2(const GridState& x) const;

  void alexander2_into(const GridState& x, std::span<int> out) const;

private:
  const GridDiagram* grid_;
  // Constant terms: doubled J-counts among markings, per component.
  std::vector<int> marking_term2_;  // J(X+O, X_i) - J(X+O, O_i), doubled
  int j_oo2_ = 0;                   // J(O, O), doubled
};

int maslov(const GridDiagram& g, const GridState& x);
std::vector<int> alexander2(const GridDiagram& g, const GridState& x);

/// Per-grid lookup of which rectangles contain no O or X marking.
/// Indexed by canonical corners (i < j, a < b) and the four span choices.
class RectTable {
public:
  explicit RectTable(const GridDiagram& g);

  bool marking_free(const Rectangle& r) const;

  int size() const { return size_; }

private:
  int size_;
  std::vector<bool> free_;  // [i][a][j][b][outer_cols*2+outer_rows]
  int index(int i, int a, int j, int b, bool oc, bool orw) const {
    return (((i * size_ + a) * size_ + j) * size_ + b) * 4 + int(oc) * 2 +
           int(orw);
  }
};

/// Calls fn(y, rect) for every empty rectangle leaving x: interior free of
/// state points and of all O and X markings (the tilde differential).
void for_each_empty_rectangle(
    const GridDiagram& g, const RectTable& table, const GridState& x,
    const std::function<void(const GridState&, const Rectangle&)>& fn);

std::vector<std::pair<GridState, Rectangle>> empty_rectangles(
    const GridDiagram& g, const GridState& x);

}  // namespace hfl

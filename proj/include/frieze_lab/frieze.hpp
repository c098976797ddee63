#pragma once

// Closed Coxeter frieze patterns over a generic field-like scalar, together
// with the diagonal and zigzag coordinate systems and their mutations.
//
// Layout: entry v[r][j] with r in {-1, 0, ..., w+1} and j taken modulo the
// period n = w + 3. Row -1 is zero, rows 0 and w+1 are ones, the quiddity is
// row 1. An elementary diamond at (r, j) is
//
//            v[r-1][j+1]
//   v[r][j]              v[r][j+1]
//            v[r+1][j]
//
// and the frieze rule reads v[r][j] v[r][j+1] - v[r-1][j+1] v[r+1][j] = 1.
// A South-East step keeps the column, a South-West step decrements it.

#include <cstddef>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "frieze_lab/error.hpp"
#include "frieze_lab/scalar.hpp"

namespace frieze_lab {

inline int mod_index(long long j, int n) {
  long long m = j % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

template <class T>
class FriezePattern {
 public:
  FriezePattern() = default;

  /// Takes rows 0..w+1, each of length n = w + 3. Performs no validation;
  /// use check_diamonds and friends for that.
  explicit FriezePattern(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) fail(ErrorKind::InvalidArgument, "a frieze needs at least two rows");
    width_ = static_cast<int>(rows_.size()) - 2;
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != width_ + 3) {
        fail(ErrorKind::InvalidArgument, "every row must have period width + 3 entries");
      }
    }
  }

  int width() const { return width_; }
  int period() const { return width_ + 3; }

  /// Entry v[r][j]; rows outside -1..w+1 read as the surrounding zero rows.
  T at(int r, long long j) const {
    if (r < 0 || r > width_ + 1) return T(0);
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(mod_index(j, period()))];
  }

  const std::vector<T>& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }
  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<T>& quiddity() const { return rows_.at(1); }

  friend bool operator==(const FriezePattern& a, const FriezePattern& b) {
    return a.rows_ == b.rows_;
  }

 private:
  int width_ = 0;
  std::vector<std::vector<T>> rows_;
};

template <class T>
bool frieze_equal(const FriezePattern<T>& a, const FriezePattern<T>& b) {
  if (a.width() != b.width()) return false;
  for (int r = 0; r <= a.width() + 1; ++r) {
    for (int j = 0; j < a.period(); ++j) {
      if (!scalar_equal(a.at(r, j), b.at(r, j))) return false;
    }
  }
  return true;
}

/// Propagates rows downward from the quiddity until the closing row of ones
/// (and the zero row below it) is reached.
template <class T>
FriezePattern<T> propagate_from_quiddity(const std::vector<T>& c) {
  const int n = static_cast<int>(c.size());
  if (n < 3) fail(ErrorKind::InvalidArgument, "a quiddity needs at least 3 entries");
  std::vector<std::vector<T>> rows;
  rows.emplace_back(static_cast<std::size_t>(n), T(1));
  rows.push_back(c);
  // Rows 2..n-1; row n-2 must be ones and row n-1 zeros.
  for (int r = 1; r <= n - 2; ++r) {
    std::vector<T> next(static_cast<std::size_t>(n));
    const auto& cur = rows[static_cast<std::size_t>(r)];
    const auto& up = rows[static_cast<std::size_t>(r - 1)];
    for (int j = 0; j < n; ++j) {
      const T& d = up[static_cast<std::size_t>(mod_index(j + 1, n))];
      if (scalar_is_zero(d)) {
        fail(ErrorKind::ZeroEntryEncountered,
             "zero entry at row " + std::to_string(r - 1) + ", column " +
                 std::to_string(mod_index(j + 1, n)));
      }
      next[static_cast<std::size_t>(j)] =
          (cur[static_cast<std::size_t>(j)] * cur[static_cast<std::size_t>(mod_index(j + 1, n))] - T(1)) / d;
    }
    rows.push_back(std::move(next));
  }
  for (int j = 0; j < n; ++j) {
    if (!scalar_equal(rows[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(j)], T(1)) ||
        !scalar_is_zero(rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)])) {
      fail(ErrorKind::NotClosed, "no closing row of ones after " + std::to_string(n - 3) + " rows");
    }
  }
  rows.pop_back();
  // Snap the closing row to exact ones (matters only for floating scalars).
  rows.back().assign(static_cast<std::size_t>(n), T(1));
  return FriezePattern<T>(std::move(rows));
}

// ---------------------------------------------------------------------------
// Zigzag paths

enum class Move { SE, SW };

inline char move_char(Move m) { return m == Move::SE ? 'E' : 'W'; }
inline std::string to_string(Move m) { return m == Move::SE ? "SE" : "SW"; }

/// A monotone path from row 1 down to row w: entry k sits on row k + 1.
struct ZigzagPath {
  int start = 0;            // column of the row-1 entry
  std::vector<Move> moves;  // w - 1 steps (empty for w <= 1)

  int length() const { return static_cast<int>(moves.size()) + 1; }

  /// Columns of the entries, not reduced modulo the period.
  std::vector<long long> columns(int width) const {
    std::vector<long long> cols;
    if (width <= 0) return cols;
    long long j = start;
    cols.push_back(j);
    for (Move m : moves) {
      if (m == Move::SW) --j;
      cols.push_back(j);
    }
    return cols;
  }

  static ZigzagPath diagonal(int width, int start = 0) {
    ZigzagPath p;
    p.start = start;
    if (width > 1) p.moves.assign(static_cast<std::size_t>(width - 1), Move::SE);
    return p;
  }

  /// All 2^(w-1) paths with the given start column.
  static std::vector<ZigzagPath> all(int width, int start = 0) {
    std::vector<ZigzagPath> out;
    const int steps = width > 1 ? width - 1 : 0;
    for (unsigned mask = 0; mask < (1u << steps); ++mask) {
      ZigzagPath p;
      p.start = start;
      for (int i = 0; i < steps; ++i) p.moves.push_back((mask >> i) & 1u ? Move::SW : Move::SE);
      out.push_back(std::move(p));
    }
    return out;
  }

  friend bool operator==(const ZigzagPath&, const ZigzagPath&) = default;
};

inline void validate_path(const ZigzagPath& p, int width) {
  const int expected = width > 1 ? width - 1 : 0;
  if (static_cast<int>(p.moves.size()) != expected) {
    fail(ErrorKind::InvalidArgument, "a zigzag of width " + std::to_string(width) + " needs " +
                                         std::to_string(expected) + " moves");
  }
}

template <class T>
struct ZigzagCoords {
  ZigzagPath path;
  std::vector<T> values;

  int width() const { return static_cast<int>(values.size()); }
  int period() const { return width() + 3; }

  friend bool operator==(const ZigzagCoords&, const ZigzagCoords&) = default;
};

/// Reads the entries of F along the path, top to bottom.
template <class T>
ZigzagCoords<T> read_zigzag(const FriezePattern<T>& F, const ZigzagPath& p) {
  validate_path(p, F.width());
  ZigzagCoords<T> z;
  z.path = p;
  z.path.start = mod_index(p.start, F.period());
  auto cols = p.columns(F.width());
  for (std::size_t k = 0; k < cols.size(); ++k) z.values.push_back(F.at(static_cast<int>(k) + 1, cols[k]));
  return z;
}

template <class T>
std::vector<T> read_diagonal(const FriezePattern<T>& F, int base = 0) {
  return read_zigzag(F, ZigzagPath::diagonal(F.width(), base)).values;
}

namespace detail {

// Fills a frieze of width w from a partial assignment by repeatedly solving
// diamonds with exactly one unknown entry.
template <class T>
FriezePattern<T> complete_frieze(int w, std::vector<std::vector<std::optional<T>>> grid) {
  const int n = w + 3;
  auto cell = [&](int r, long long j) -> std::optional<T>& {
    return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(mod_index(j, n))];
  };
  auto value = [&](int r, long long j) -> std::optional<T> {
    if (r < 0) return T(0);
    return cell(r, j);
  };

  std::deque<std::pair<int, int>> work;
  for (int r = 1; r <= w; ++r) {
    for (int j = 0; j < n; ++j) work.emplace_back(r, j);
  }
  auto touch = [&](int r, int j) {
    // Diamonds (r', j') containing (r, j): as left, right, top or bottom.
    const std::pair<int, int> cand[] = {{r, j}, {r, j - 1}, {r + 1, j - 1}, {r - 1, j}};
    for (auto [rr, jj] : cand) {
      if (rr >= 1 && rr <= w) work.emplace_back(rr, mod_index(jj, n));
    }
  };

  while (!work.empty()) {
    auto [r, j] = work.front();
    work.pop_front();
    auto L = value(r, j);
    auto R = value(r, j + 1);
    auto Tp = value(r - 1, j + 1);
    auto B = value(r + 1, j);
    int unknown = !L + !R + !Tp + !B;
    if (unknown != 1) continue;
    if (!B) {
      if (scalar_is_zero(*Tp)) continue;
      cell(r + 1, j) = (*L * *R - T(1)) / *Tp;
      touch(r + 1, mod_index(j, n));
    } else if (!Tp) {
      if (scalar_is_zero(*B)) continue;
      cell(r - 1, j + 1) = (*L * *R - T(1)) / *B;
      touch(r - 1, mod_index(j + 1, n));
    } else if (!L) {
      if (scalar_is_zero(*R)) continue;
      cell(r, j) = (T(1) + *Tp * *B) / *R;
      touch(r, mod_index(j, n));
    } else {
      if (scalar_is_zero(*L)) continue;
      cell(r, j + 1) = (T(1) + *Tp * *B) / *L;
      touch(r, mod_index(j + 1, n));
    }
  }

  std::vector<std::vector<T>> rows(static_cast<std::size_t>(w + 2));
  for (int r = 0; r <= w + 1; ++r) {
    for (int j = 0; j < n; ++j) {
      auto v = cell(r, j);
      if (!v) {
        fail(ErrorKind::ZeroEntryEncountered,
             "completion stalled at row " + std::to_string(r) + ", column " + std::to_string(j) +
                 " (a zero entry blocks the frieze rule)");
      }
      if (r >= 1 && r <= w && scalar_is_zero(*v)) {
        fail(ErrorKind::ZeroEntryEncountered,
             "zero entry at row " + std::to_string(r) + ", column " + std::to_string(j));
      }
      rows[static_cast<std::size_t>(r)].push_back(*v);
    }
  }
  FriezePattern<T> F(std::move(rows));
  for (int r = 0; r <= w + 1; ++r) {
    for (int j = 0; j < n; ++j) {
      T lhs = F.at(r, j) * F.at(r, j + 1) - F.at(r - 1, j + 1) * F.at(r + 1, j);
      if (!scalar_equal(lhs, T(1))) {
        fail(ErrorKind::NotClosed, "completed array violates the frieze rule at row " + std::to_string(r));
      }
    }
  }
  return F;
}

}  // namespace detail

/// Reconstructs the unique closed frieze with the given zigzag coordinates.
template <class T>
FriezePattern<T> zigzag_to_frieze(const ZigzagCoords<T>& z) {
  const int w = z.width();
  validate_path(z.path, w);
  const int n = w + 3;
  std::vector<std::vector<std::optional<T>>> grid(static_cast<std::size_t>(w + 2),
                                                  std::vector<std::optional<T>>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    grid[0][static_cast<std::size_t>(j)] = T(1);
    grid[static_cast<std::size_t>(w + 1)][static_cast<std::size_t>(j)] = T(1);
  }
  auto cols = z.path.columns(w);
  for (int k = 0; k < w; ++k) {
    if (scalar_is_zero(z.values[static_cast<std::size_t>(k)])) {
      fail(ErrorKind::ZeroEntryEncountered, "zigzag coordinate " + std::to_string(k + 1) + " is zero");
    }
    grid[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(mod_index(cols[static_cast<std::size_t>(k)], n))] =
        z.values[static_cast<std::size_t>(k)];
  }
  return detail::complete_frieze<T>(w, std::move(grid));
}

/// The frieze whose South-East diagonal from column `base` reads
/// (1, a_1, ..., a_w, 1).
template <class T>
FriezePattern<T> diagonal_to_frieze(const std::vector<T>& a, int base = 0) {
  const int w = static_cast<int>(a.size());
  return zigzag_to_frieze(ZigzagCoords<T>{ZigzagPath::diagonal(w, base), a});
}

/// Flips the zigzag at entry `position` (0-based) across its diamond. The new
/// entry is (1 + top * bottom) / old, where top and bottom are the path
/// neighbours (or the bounding ones).
template <class T>
ZigzagCoords<T> elementary_mutation(const ZigzagCoords<T>& z, int position) {
  const int w = z.width();
  validate_path(z.path, w);
  if (position < 0 || position >= w) {
    fail(ErrorKind::InvalidArgument, "mutation position " + std::to_string(position) + " outside 0.." +
                                         std::to_string(w - 1));
  }
  const auto k = static_cast<std::size_t>(position);
  const T& old = z.values[k];
  if (scalar_is_zero(old)) fail(ErrorKind::DivisionByZero, "mutation at a zero entry");
  T top = position > 0 ? z.values[k - 1] : T(1);
  T bottom = position + 1 < w ? z.values[k + 1] : T(1);

  ZigzagCoords<T> out = z;
  out.values[k] = (T(1) + top * bottom) / old;
  if (scalar_is_zero(out.values[k])) fail(ErrorKind::ZeroEntryEncountered, "mutation produced a zero entry");

  auto flip = [](Move m) { return m == Move::SE ? Move::SW : Move::SE; };
  const int n = w + 3;
  if (w == 1) {
    out.path.start = mod_index(z.path.start + 1, n);
  } else if (position == 0) {
    // The first entry moves east when the path continues SE, west otherwise.
    out.path.start = mod_index(z.path.start + (z.path.moves[0] == Move::SE ? 1 : -1), n);
    out.path.moves[0] = flip(z.path.moves[0]);
  } else if (position == w - 1) {
    out.path.moves[k - 1] = flip(z.path.moves[k - 1]);
  } else {
    if (z.path.moves[k - 1] == z.path.moves[k]) {
      fail(ErrorKind::InvalidArgument,
           "entry " + std::to_string(position) + " lies on a straight segment and cannot be flipped");
    }
    std::swap(out.path.moves[k - 1], out.path.moves[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariant checks

/// Number of diamonds (over rows 0..w+1, one period) violating the rule.
template <class T>
int check_diamonds(const FriezePattern<T>& F) {
  int bad = 0;
  for (int r = 0; r <= F.width() + 1; ++r) {
    for (int j = 0; j < F.period(); ++j) {
      T lhs = F.at(r, j) * F.at(r, j + 1) - F.at(r - 1, j + 1) * F.at(r + 1, j);
      if (!scalar_equal(lhs, T(1))) ++bad;
    }
  }
  return bad;
}

/// True when the bounding rows are ones and no interior entry vanishes.
template <class T>
bool check_rows(const FriezePattern<T>& F) {
  for (int j = 0; j < F.period(); ++j) {
    if (!scalar_equal(F.at(0, j), T(1)) || !scalar_equal(F.at(F.width() + 1, j), T(1))) return false;
    for (int r = 1; r <= F.width(); ++r) {
      if (scalar_is_zero(F.at(r, j))) return false;
    }
  }
  return true;
}

/// The glide map (r, j) -> (w + 1 - r, j + r + 1); its square is the shift
/// by the period.
inline std::pair<int, long long> glide(int width, int r, long long j) { return {width + 1 - r, j + r + 1}; }

template <class T>
bool check_glide(const FriezePattern<T>& F) {
  for (int r = 0; r <= F.width() + 1; ++r) {
    for (int j = 0; j < F.period(); ++j) {
      auto [r2, j2] = glide(F.width(), r, j);
      if (!scalar_equal(F.at(r, j), F.at(r2, j2))) return false;
    }
  }
  return true;
}

/// Propagates the quiddity over `columns` consecutive (non-wrapped) columns,
/// producing a triangle: row r has columns - r + 1 entries. Used to test
/// horizontal periodicity without assuming it.
template <class T>
std::vector<std::vector<T>> unfold(const std::vector<T>& c, int rows, int columns) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<T>> out;
  out.emplace_back(static_cast<std::size_t>(columns), T(1));
  std::vector<T> first;
  for (int j = 0; j < columns; ++j) first.push_back(c[static_cast<std::size_t>(mod_index(j, n))]);
  out.push_back(std::move(first));
  for (int r = 1; r + 1 <= rows; ++r) {
    const auto& cur = out[static_cast<std::size_t>(r)];
    const auto& up = out[static_cast<std::size_t>(r - 1)];
    std::vector<T> next;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (scalar_is_zero(up[j + 1])) fail(ErrorKind::ZeroEntryEncountered, "zero entry while unfolding");
      next.push_back((cur[j] * cur[j + 1] - T(1)) / up[j + 1]);
    }
    out.push_back(std::move(next));
  }
  return out;
}

/// Checks v[r][j + n] = v[r][j] on an unfolded (non-cyclic) strip of three
/// periods.
template <class T>
bool check_period(const FriezePattern<T>& F) {
  const int n = F.period();
  auto strip = unfold(F.quiddity(), F.width() + 1, 3 * n);
  for (std::size_t r = 0; r < strip.size(); ++r) {
    const auto& row = strip[r];
    for (std::size_t j = 0; j + static_cast<std::size_t>(n) < row.size(); ++j) {
      if (!scalar_equal(row[j], row[j + static_cast<std::size_t>(n)])) return false;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!scalar_equal(row[j], F.at(static_cast<int>(r), static_cast<long long>(j)))) return false;
    }
  }
  return true;
}

}  // namespace frieze_lab

#include "lexshell/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace lexshell {

FaceLattice enumerate_faces(const Complex& d, const HomologyOptions& options) {
  FaceLattice out;
  if (d.is_void()) return out;
  const int top = d.max_facet_size();
  out.by_size.resize(static_cast<std::size_t>(top) + 1);

  std::size_t total = 0;
  auto charge = [&](std::size_t n) {
    total += n;
    if (total > options.face_cap) {
      throw ResourceError("face enumeration exceeds the cap of " + std::to_string(options.face_cap) + " faces");
    }
  };

  // Walk down one size at a time; every face is generated from the faces
  // one larger, so each face costs O(size) regardless of facet overlap.
  std::unordered_set<VertexSet> level;
  for (int k = top; k >= 0; --k) {
    for (VertexSet f : d.facets()) {
      if (f.size() == k) level.insert(f);
    }
    charge(level.size());
    std::unordered_set<VertexSet> below;
    for (VertexSet f : level) f.for_each([&](int v) { below.insert(f.without(v)); });
    auto& bucket = out.by_size[static_cast<std::size_t>(k)];
    bucket.assign(level.begin(), level.end());
    std::sort(bucket.begin(), bucket.end(), CanonicalLess{});
    level = std::move(below);
  }
  return out;
}

BoundaryMatrix boundary_matrix(const FaceLattice& faces, int face_size) {
  BoundaryMatrix m;
  if (face_size < 1 || static_cast<std::size_t>(face_size) >= faces.by_size.size()) {
    m.rows = faces.count(face_size - 1);
    m.cols = faces.count(face_size);
    m.columns.resize(m.cols);
    return m;
  }
  const auto& lower = faces.by_size[static_cast<std::size_t>(face_size - 1)];
  const auto& upper = faces.by_size[static_cast<std::size_t>(face_size)];
  std::unordered_map<VertexSet, std::size_t> row_index;
  row_index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row_index.emplace(lower[i], i);

  m.rows = lower.size();
  m.cols = upper.size();
  m.columns.resize(m.cols);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int position = 0;
    auto& column = m.columns[c];
    upper[c].for_each([&](int v) {
      column.emplace_back(row_index.at(upper[c].without(v)), position % 2 == 0 ? 1 : -1);
      ++position;
    });
    std::sort(column.begin(), column.end());
  }
  return m;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.cols != upper.rows) return false;
  std::unordered_map<std::size_t, long long> acc;
  for (const auto& column : upper.columns) {
    acc.clear();
    for (const auto& [mid, a] : column)
      for (const auto& [row, b] : lower.columns[mid]) acc[row] += static_cast<long long>(a) * b;
    for (const auto& [row, value] : acc)
      if (value != 0) return false;
  }
  return true;
}

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  long long p = 0;
  long long r = 0;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}

BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Smith normal form of a small dense matrix.
std::vector<BigInt> dense_invariant_factors(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

template <class Int>
SmithForm eliminate(const BoundaryMatrix& m) {
  using Row = std::vector<std::pair<std::uint32_t, Int>>;
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& [r, s] : m.columns[c]) {
      rows[r].emplace_back(static_cast<std::uint32_t>(c), Int(s));
      col_rows[c].push_back(static_cast<std::uint32_t>(r));
    }
  }

  auto entry = [&](std::uint32_t r, std::uint32_t c) -> const Int* {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };

  std::vector<char> row_alive(m.rows, 1);
  std::vector<char> col_alive(m.cols, 1);
  std::vector<std::uint32_t> stamp(m.rows, 0);
  std::uint32_t epoch = 0;
  std::size_t units = 0;
  std::vector<std::uint32_t> live;
  Row merged;

  // Peel unit pivots: clearing the pivot column by row operations leaves the
  // pivot row removable by column operations that touch nothing else.
  for (bool progress = true; progress;) {
    progress = false;
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      if (!col_alive[c]) continue;
      ++epoch;
      live.clear();
      for (std::uint32_t r : col_rows[c]) {
        if (row_alive[r] && stamp[r] != epoch && entry(r, c) != nullptr) {
          stamp[r] = epoch;
          live.push_back(r);
        }
      }
      col_rows[c] = live;
      if (live.empty()) {
        col_alive[c] = 0;
        continue;
      }
      std::uint32_t pivot = 0;
      bool have_pivot = false;
      for (std::uint32_t r : live) {
        if (is_unit(*entry(r, c)) && (!have_pivot || rows[r].size() < rows[pivot].size())) {
          pivot = r;
          have_pivot = true;
        }
      }
      if (!have_pivot) continue;
      const Int p = *entry(pivot, c);
      const Row& prow = rows[pivot];
      for (std::uint32_t r : live) {
        if (r == pivot) continue;
        const Int q = *entry(r, c) * p;  // p = ±1, so a / p = a * p
        merged.clear();
        const Row& target = rows[r];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < target.size() || j < prow.size()) {
          if (j == prow.size() || (i < target.size() && target[i].first < prow[j].first)) {
            merged.push_back(target[i++]);
          } else if (i == target.size() || prow[j].first < target[i].first) {
            merged.emplace_back(prow[j].first, sub_mul(Int(0), q, prow[j].second));
            col_rows[prow[j].first].push_back(r);
            ++j;
          } else {
            Int v = sub_mul(target[i].second, q, prow[j].second);
            if (v != 0) merged.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
          }
        }
        rows[r].swap(merged);
      }
      row_alive[pivot] = 0;
      col_alive[c] = 0;
      ++units;
      progress = true;
    }
  }

  // Whatever survives has no unit entries; finish it densely.
  std::vector<std::uint32_t> residual_rows;
  std::vector<std::uint32_t> residual_cols;
  std::unordered_map<std::uint32_t, std::size_t> col_position;
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    residual_rows.push_back(r);
    for (const auto& e : rows[r]) {
      if (col_position.emplace(e.first, residual_cols.size()).second) residual_cols.push_back(e.first);
    }
  }
  std::vector<std::vector<BigInt>> dense(residual_rows.size(), std::vector<BigInt>(residual_cols.size()));
  for (std::size_t i = 0; i < residual_rows.size(); ++i)
    for (const auto& e : rows[residual_rows[i]]) dense[i][col_position.at(e.first)] = BigInt(e.second);

  SmithForm out;
  out.rank = units;
  for (BigInt& f : dense_invariant_factors(std::move(dense))) {
    ++out.rank;
    if (f != 1) out.torsion.push_back(std::move(f));
  }
  return out;
}

}  // namespace

SmithForm smith_form(const BoundaryMatrix& m) {
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Overflow&) {
    return eliminate<BigInt>(m);
  }
}

bool HomologyProfile::satisfies_euler_relation() const {
  long long faces = 0;
  long long bettis = 0;
  for (std::size_t k = 0; k < face_counts.size(); ++k) {
    const long long sign = (k % 2 == 0) ? -1 : 1;  // index k is dimension k - 1
    faces += sign * static_cast<long long>(face_counts[k]);
    bettis += sign * static_cast<long long>(betti[k]);
  }
  return faces == bettis;
}

HomologyProfile reduced_homology(const Complex& d, const HomologyOptions& options) {
  if (d.is_void()) throw std::invalid_argument("reduced homology of the void complex is not defined here");
  const FaceLattice faces = enumerate_faces(d, options);
  const int sizes = static_cast<int>(faces.by_size.size());  // top face size + 1

  // forms[k] describes the boundary out of faces of size k.
  std::vector<SmithForm> forms(static_cast<std::size_t>(sizes) + 1);
  for (int k = 1; k < sizes; ++k) forms[static_cast<std::size_t>(k)] = smith_form(boundary_matrix(faces, k));

  HomologyProfile p;
  p.top_dimension = sizes - 2;
  for (int k = 0; k < sizes; ++k) {
    const std::size_t idx = static_cast<std::size_t>(k);
    p.face_counts.push_back(faces.count(k));
    p.betti.push_back(faces.count(k) - forms[idx].rank - forms[idx + 1].rank);
    p.torsion.push_back(forms[idx + 1].torsion);
  }
  return p;
}

bool is_cohen_macaulay(const Complex& d, const HomologyOptions& options) {
  if (d.is_void() || !is_pure(d)) return false;
  const FaceLattice faces = enumerate_faces(d, options);
  const int dim = d.dimension();
  std::set<std::vector<std::uint64_t>> verified;
  const auto start = std::chrono::steady_clock::now();
  auto check_budget = [&] {
    if (options.timeout && std::chrono::steady_clock::now() - start > *options.timeout) {
      throw BudgetExceeded("Cohen-Macaulay check exceeded its time budget");
    }
  };

  for (int k = static_cast<int>(faces.by_size.size()) - 1; k >= 0; --k) {
    const int link_dim = dim - k;
    // Below dimension 1 the only requirement is nonvoidness.
    if (link_dim < 1) continue;
    for (VertexSet f : faces.by_size[static_cast<std::size_t>(k)]) {
      const Complex lk = link(d, f);
      if (lk.is_simplex()) continue;
      std::vector<std::uint64_t> key;
      for (VertexSet g : lk.facets()) key.push_back(g.bits());
      if (verified.contains(key)) continue;
      check_budget();
      const HomologyProfile p = reduced_homology(lk, options);
      for (int i = -1; i < link_dim; ++i) {
        if (p.betti_at(i) != 0) return false;
      }
      verified.insert(std::move(key));
    }
  }
  return true;
}

}  // namespace lexshell

#include "ore/homology.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "ore/common.hpp"

namespace ore {

namespace {

using boost::multiprecision::cpp_int;

struct Overflow {};

// Dense Smith normal form; returns the diagonal (absolute values, in
// divisibility order).
std::vector<cpp_int> dense_snf_diagonal(std::vector<std::vector<cpp_int>> a) {
  const int rows = static_cast<int>(a.size());
  const int colc = rows > 0 ? static_cast<int>(a[0].size()) : 0;
  std::vector<cpp_int> diag;
  for (int t = 0; t < rows && t < colc; ++t) {
    // Pivot: nonzero entry of smallest magnitude.
    int pr = -1, pc = -1;
    cpp_int best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < colc; ++c)
        if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < best)) {
          best = abs(a[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
    bool again = true;
    while (again) {
      again = false;
      for (int r = 0; r < rows && !again; ++r) {
        if (r == t || a[r][t] == 0) continue;
        cpp_int q = a[r][t] / a[t][t];
        for (int c = t; c < colc; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {  // remainder is smaller: swap up and restart
          std::swap(a[t], a[r]);
          again = true;
        }
      }
      if (again) continue;
      for (int c = 0; c < colc && !again; ++c) {
        if (c == t || a[t][c] == 0) continue;
        cpp_int q = a[t][c] / a[t][t];
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][c]);
          again = true;
        }
      }
      if (again) continue;
      // Divisibility: the pivot must divide the remaining block.
      for (int r = t + 1; r < rows && !again; ++r)
        for (int c = t + 1; c < colc; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (int cc = t; cc < colc; ++cc) a[t][cc] += a[r][cc];
            again = true;
            break;
          }
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

SmithSummary summarize_diagonal(std::int64_t unit_rank, const std::vector<cpp_int> &diag) {
  SmithSummary s;
  s.rank = unit_rank;
  for (const cpp_int &d : diag) {
    if (d == 0) continue;
    ++s.rank;
    if (d > 1) s.divisors.push_back(d.str());
  }
  return s;
}

// Sparse elimination over ±1 pivots, templated on the coefficient type so a
// 64-bit overflow can restart the run with big integers.
template <typename I>
struct Elimination {
  using Col = std::vector<std::pair<std::int64_t, I>>;

  std::int64_t rows = 0;
  std::vector<Col> cols;
  std::vector<std::int64_t> row_nnz;
  std::vector<std::set<int>> row_cols;
  std::vector<char> col_alive;
  std::vector<std::int64_t> col_nnz;
  std::vector<char> col_unit;
  std::set<std::pair<std::int64_t, int>> unit_cols;  // (nnz, col)
  std::int64_t unit_rank = 0;

  static bool is_unit(const I &v) { return v == 1 || v == -1; }

  explicit Elimination(const SparseMat &m) : rows(m.rows) {
    cols.resize(m.cols.size());
    row_nnz.assign(rows, 0);
    row_cols.assign(rows, {});
    col_alive.assign(cols.size(), 1);
    col_nnz.assign(cols.size(), 0);
    col_unit.assign(cols.size(), 0);
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      Col col;
      col.reserve(m.cols[c].size());
      for (auto [r, v] : m.cols[c]) col.emplace_back(r, I(v));
      install(static_cast<int>(c), std::move(col));
    }
  }

  void install(int c, Col col) {
    if (col_unit[c]) unit_cols.erase({col_nnz[c], c});
    for (auto &[r, v] : cols[c]) {
      --row_nnz[r];
      row_cols[r].erase(c);
    }
    cols[c] = std::move(col);
    col_nnz[c] = static_cast<std::int64_t>(cols[c].size());
    col_unit[c] = 0;
    for (auto &[r, v] : cols[c]) {
      ++row_nnz[r];
      row_cols[r].insert(c);
      if (is_unit(v)) col_unit[c] = 1;
    }
    if (col_alive[c] && col_unit[c]) unit_cols.insert({col_nnz[c], c});
  }

  void kill_col(int c) {
    if (col_unit[c]) unit_cols.erase({col_nnz[c], c});
    for (auto &[r, v] : cols[c]) {
      --row_nnz[r];
      row_cols[r].erase(c);
    }
    cols[c].clear();
    col_nnz[c] = 0;
    col_unit[c] = 0;
    col_alive[c] = 0;
  }

  // new_col = col_j - mult * col_pivot (entry at the pivot row cancels).
  Col merged(const Col &col_j, const Col &col_pivot, const I &mult) const {
    Col out;
    out.reserve(col_j.size() + col_pivot.size());
    std::size_t i = 0, k = 0;
    while (i < col_j.size() || k < col_pivot.size()) {
      if (k == col_pivot.size() ||
          (i < col_j.size() && col_j[i].first < col_pivot[k].first)) {
        out.push_back(col_j[i++]);
      } else if (i == col_j.size() || col_pivot[k].first < col_j[i].first) {
        I v = value_sub(I(0), mult, col_pivot[k].second);
        if (v != 0) out.emplace_back(col_pivot[k].first, v);
        ++k;
      } else {
        I v = value_sub(col_j[i].second, mult, col_pivot[k].second);
        if (v != 0) out.emplace_back(col_j[i].first, v);
        ++i;
        ++k;
      }
    }
    return out;
  }

  // a - m*b with overflow detection on the 64-bit path.
  static I value_sub(const I &a, const I &m, const I &b) {
    if constexpr (std::is_same_v<I, std::int64_t>) {
      __int128 r = static_cast<__int128>(a) - static_cast<__int128>(m) * b;
      if (r > std::numeric_limits<std::int64_t>::max() ||
          r < std::numeric_limits<std::int64_t>::min())
        throw Overflow{};
      return static_cast<std::int64_t>(r);
    } else {
      return a - m * b;
    }
  }

  void run() {
    while (!unit_cols.empty()) {
      const int c = unit_cols.begin()->second;
      std::int64_t prow = -1;
      I sign{};
      for (auto &[r, v] : cols[c])
        if (is_unit(v) &&
            (prow < 0 || std::pair(row_nnz[r], r) < std::pair(row_nnz[prow], prow))) {
          prow = r;
          sign = v;
        }
      eliminate(prow, c, sign);
      ++unit_rank;
    }
  }

  void eliminate(std::int64_t prow, int c, const I &sign) {
    std::vector<int> affected;
    for (int j : row_cols[prow])
      if (j != c) affected.push_back(j);
    std::vector<Col> scratch(affected.size());
    std::atomic<bool> overflow{false};
    // The merges are independent; bookkeeping is applied serially below in
    // ascending column order, so the result does not depend on thread count.
#pragma omp parallel for schedule(dynamic) if (affected.size() > 16)
    for (long idx = 0; idx < static_cast<long>(affected.size()); ++idx) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      try {
        const Col &col_j = cols[affected[idx]];
        I entry{};
        for (auto &[r, v] : col_j)
          if (r == prow) {
            entry = v;
            break;
          }
        scratch[idx] = merged(col_j, cols[c], I(entry * sign));
      } catch (const Overflow &) {
        overflow.store(true, std::memory_order_relaxed);
      }
    }
    if (overflow.load()) throw Overflow{};
    for (std::size_t idx = 0; idx < affected.size(); ++idx)
      install(affected[idx], std::move(scratch[idx]));
    kill_col(c);
  }

  SmithSummary finish() const {
    // Compact the residue (no ±1 entries left) into a dense block.
    std::map<std::int64_t, int> row_index;
    std::vector<int> live_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (col_alive[c] && !cols[c].empty()) live_cols.push_back(static_cast<int>(c));
    for (int c : live_cols)
      for (auto &[r, v] : cols[c])
        row_index.emplace(r, 0);
    int next = 0;
    for (auto &[r, idx] : row_index) idx = next++;
    std::uint64_t used = 0;
    charge_budget(used,
                  static_cast<std::uint64_t>(row_index.size()) * live_cols.size(),
                  "dense homology residue");
    std::vector<std::vector<cpp_int>> dense(
        row_index.size(), std::vector<cpp_int>(live_cols.size(), 0));
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (auto &[r, v] : cols[live_cols[j]]) dense[row_index[r]][j] = cpp_int(v);
    return summarize_diagonal(unit_rank, dense_snf_diagonal(std::move(dense)));
  }
};

}  // namespace

std::vector<SparseMat> boundary_matrices(const SimplicialComplex &x, int max_dim) {
  auto levels = simplices_by_dim(x, max_dim < 0 ? -1 : max_dim + 1);
  std::vector<SparseMat> mats;
  if (levels.empty()) return mats;
  std::vector<std::map<std::vector<int>, int>> index(levels.size());
  for (std::size_t d = 0; d < levels.size(); ++d)
    for (std::size_t i = 0; i < levels[d].size(); ++i)
      index[d].emplace(levels[d][i], static_cast<int>(i));

  SparseMat aug;
  aug.rows = 1;
  aug.cols.assign(levels[0].size(), {{0, 1}});
  mats.push_back(std::move(aug));

  for (std::size_t k = 1; k < levels.size(); ++k) {
    SparseMat d;
    d.rows = static_cast<std::int64_t>(levels[k - 1].size());
    d.cols.resize(levels[k].size());
    for (std::size_t ci = 0; ci < levels[k].size(); ++ci) {
      const auto &simplex = levels[k][ci];
      auto &col = d.cols[ci];
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        std::vector<int> face;
        face.reserve(simplex.size() - 1);
        for (std::size_t j = 0; j < simplex.size(); ++j)
          if (j != i) face.push_back(simplex[j]);
        col.emplace_back(index[k - 1].at(face), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    mats.push_back(std::move(d));
  }
  return mats;
}

SmithSummary smith_sparse(const SparseMat &m) {
  try {
    Elimination<std::int64_t> e(m);
    e.run();
    return e.finish();
  } catch (const Overflow &) {
    Elimination<cpp_int> e(m);
    e.run();
    return e.finish();
  }
}

SmithSummary smith_dense_reference(const SparseMat &m) {
  std::uint64_t used = 0;
  charge_budget(used, static_cast<std::uint64_t>(m.rows) * m.cols.size(),
                "dense reference matrix");
  std::vector<std::vector<cpp_int>> dense(m.rows,
                                          std::vector<cpp_int>(m.cols.size(), 0));
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    for (auto [r, v] : m.cols[c]) {
      if (r < 0 || r >= m.rows) throw InvalidInput("smith_dense_reference: bad row");
      dense[r][c] = v;
    }
  return summarize_diagonal(0, dense_snf_diagonal(std::move(dense)));
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex &x, int max_dim,
                                            HomologyEngine engine) {
  if (max_dim < 0) throw InvalidInput("reduced_homology: max_dim must be >= 0");
  auto mats = boundary_matrices(x, max_dim);
  std::vector<HomologyGroup> out(max_dim + 1);
  if (mats.empty()) return out;
  std::vector<SmithSummary> s(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    s[k] = engine == HomologyEngine::Sparse ? smith_sparse(mats[k])
                                            : smith_dense_reference(mats[k]);
  for (int k = 0; k <= max_dim; ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    const std::int64_t n_k =
        uk < mats.size() ? static_cast<std::int64_t>(mats[uk].cols.size()) : 0;
    const std::int64_t r_k = uk < mats.size() ? s[uk].rank : 0;
    const std::int64_t r_k1 = uk + 1 < mats.size() ? s[uk + 1].rank : 0;
    out[k].rank = n_k - r_k - r_k1;
    if (uk + 1 < mats.size()) out[k].torsion = s[uk + 1].divisors;
  }
  return out;
}

int homological_connectivity(const SimplicialComplex &x, int max_dim,
                             HomologyEngine engine) {
  if (complex_dimension(x) < 0) return -2;
  auto groups = reduced_homology(x, max_dim, engine);
  int c = -1;
  for (int k = 0; k <= max_dim; ++k) {
    if (!groups[k].trivial()) break;
    c = k;
  }
  return c;
}

std::string homology_to_text(const HomologyGroup &h) {
  std::vector<std::string> parts;
  if (h.rank == 1) parts.push_back("Z");
  if (h.rank > 1) parts.push_back("Z^" + std::to_string(h.rank));
  for (const std::string &d : h.torsion) parts.push_back("Z/" + d);
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace ore

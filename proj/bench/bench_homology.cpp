// Compares the parallel sparse Smith engine against the serial dense
// reference on a fixed zoo of complexes: agreement is checked exactly, the
// dense engine is skipped where its quadratic storage would be unreasonable.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ore/complex.hpp"
#include "ore/homology.hpp"

using namespace ore;

namespace {

double seconds(const std::function<void()> &f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string groups_text(const std::vector<HomologyGroup> &gs) {
  std::string out;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    if (k) out += ", ";
    out += "H~" + std::to_string(k) + "=" + homology_to_text(gs[k]);
  }
  return out.empty() ? "none" : out;
}

// Estimated dense workload: the largest rows*cols over the boundary
// matrices that reduced_homology will visit.
std::int64_t dense_cells(const SimplicialComplex &x, int max_dim) {
  const std::vector<std::int64_t> f = f_vector(x);
  auto count = [&](int d) -> std::int64_t {
    if (d < 0) return 1;  // the augmentation row
    return d < (int)f.size() ? f[d] : 0;
  };
  std::int64_t worst = 0;
  for (int d = 0; d <= max_dim + 1; ++d)
    worst = std::max(worst, count(d - 1) * count(d));
  return worst;
}

}  // namespace

int main() {
  struct Entry {
    std::string name;
    SimplicialComplex x;
    int depth;  // homology is computed in degrees 0..min(depth, dim)
  };
  std::vector<Entry> zoo;
  zoo.push_back({"M(L_10)", matching_complex(path_graph(10)), 3});
  zoo.push_back({"M(L_12)", matching_complex(path_graph(12)), 3});
  zoo.push_back({"M(C_10)", matching_complex(cycle_graph(10)), 3});
  zoo.push_back({"M(C_12)", matching_complex(cycle_graph(12)), 3});
  zoo.push_back({"M(K_7)", matching_complex(complete_graph(7)), 3});
  zoo.push_back({"M(K_8)", matching_complex(complete_graph(8)), 3});
  zoo.push_back({"M(K_12)", matching_complex(complete_graph(12)), 2});
  zoo.push_back({"sublevel(6)", sublevel_complex(6), 3});
  zoo.push_back({"E_V(5)", descending_complex(Family::V, 5), 3});

  constexpr std::int64_t kDenseCellCap = 8'000'000;
  std::printf("%-12s %5s %8s %10s %10s %8s  %s\n", "complex", "dim", "cells",
              "sparse(s)", "dense(s)", "speedup", "homology");
  int disagreements = 0;
  for (const auto &[name, x, depth] : zoo) {
    const int dim = complex_dimension(x);
    const int max_dim = std::min(depth, dim);
    std::vector<HomologyGroup> sparse, dense;
    const double ts = seconds(
        [&] { sparse = reduced_homology(x, max_dim, HomologyEngine::Sparse); });
    const std::int64_t cells = dense_cells(x, max_dim);
    if (cells > kDenseCellCap) {
      std::printf("%-12s %5d %8lld %10.3f %10s %8s  %s\n", name.c_str(), dim,
                  (long long)cells, ts, "skipped", "-",
                  groups_text(sparse).c_str());
      std::fflush(stdout);
      continue;
    }
    const double td = seconds([&] {
      dense = reduced_homology(x, max_dim, HomologyEngine::DenseReference);
    });
    const bool same = sparse == dense;
    if (!same) ++disagreements;
    std::printf("%-12s %5d %8lld %10.3f %10.3f %8.1f  %s%s\n", name.c_str(), dim,
                (long long)cells, ts, td, ts > 0 ? td / ts : 0.0,
                groups_text(sparse).c_str(), same ? "" : "  << DISAGREE");
    std::fflush(stdout);
  }
  if (disagreements)
    std::printf("%d complex(es) disagree between engines\n", disagreements);
  return disagreements ? 1 : 0;
}

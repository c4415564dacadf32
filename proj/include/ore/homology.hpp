#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ore/complex.hpp"

namespace ore {

// Column-major sparse integer matrix: each column lists (row, value) with
// strictly increasing row indices and nonzero values.
struct SparseMat {
  std::int64_t rows = 0;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cols;
};

// Boundary operators of the reduced (augmented) chain complex.  Index 0 is
// the augmentation row over the vertices; index k maps k-chains to
// (k-1)-chains.  Matrices are produced for k = 0 .. min(dim, max_dim + 1),
// or the whole complex when max_dim < 0.
std::vector<SparseMat> boundary_matrices(const SimplicialComplex &x, int max_dim = -1);

struct SmithSummary {
  std::int64_t rank = 0;
  std::vector<std::string> divisors;  // elementary divisors > 1, divisibility order
};

// Sparse elimination on ±1 pivots (OpenMP-parallel column updates, with a
// deterministic serial schedule), finished by an exact big-integer Smith
// normal form of the small residue.  Falls back to big-integer coefficients
// if 64-bit arithmetic would overflow.
SmithSummary smith_sparse(const SparseMat &m);

// Serial dense big-integer Smith normal form; the reference engine the
// sparse one is tested against.
SmithSummary smith_dense_reference(const SparseMat &m);

enum class HomologyEngine { Sparse, DenseReference };

struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<std::string> torsion;  // nontrivial torsion coefficients
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup &) const = default;
};

// Reduced integral homology in degrees 0..max_dim.
std::vector<HomologyGroup> reduced_homology(
    const SimplicialComplex &x, int max_dim,
    HomologyEngine engine = HomologyEngine::Sparse);

// Largest c <= max_dim such that reduced homology vanishes in all degrees
// <= c; -1 when already reduced H_0 is nonzero, -2 for the empty complex.
int homological_connectivity(const SimplicialComplex &x, int max_dim,
                             HomologyEngine engine = HomologyEngine::Sparse);

std::string homology_to_text(const HomologyGroup &h);  // "0", "Z^2 + Z/3", ...

}  // namespace ore

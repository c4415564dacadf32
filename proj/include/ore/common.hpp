#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ore {

// Raised on malformed input: degree mismatches, invalid indices, bad JSON, ...
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Global work budget for enumerations (units, simplices, patterns).
// Initialised from the ORE_SIZE_BUDGET environment variable on first use.
std::uint64_t size_budget();
void set_size_budget(std::uint64_t);
void charge_budget(std::uint64_t &used, std::uint64_t amount, const char *what);

inline int rand_int(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace ore

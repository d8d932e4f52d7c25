#pragma once

#include <cstdint>

#include "fpmine/database.hpp"

namespace fpmine {

// splitmix64: the output mixer from Steele et al.'s "Fast Splittable
// Pseudorandom Number Generators". Chosen because the whole algorithm fits in
// four lines and can be re-typed in any language from the three constants
// below, which makes generated datasets reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Plain modulo — the bias is below 2^-32
  // for any bound that fits an item universe, and the simple form is what
  // keeps the algorithm portable.
  std::uint64_t next_below(std::uint64_t bound) {
    return next() % bound;
  }

 private:
  std::uint64_t state_;
};

// Knuth's product-method Poisson sample. For means above 30 the draw is
// split recursively (Poisson(m) = Poisson(m/2) + Poisson(m - m/2)) so the
// running product stays away from double underflow.
std::uint64_t poisson(SplitMix64& rng, double mean);

struct GenParams {
  std::size_t num_transactions = 0;  // D
  double avg_transaction_length = 0; // T
  double avg_pattern_length = 0;     // I
  std::size_t num_items = 0;
  std::size_t num_patterns = 0;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Simplified Quest-style generation: draw a pool of base patterns, then build
// each transaction from randomly chosen patterns (each pattern item kept with
// probability 1/2) and pad with uniform items up to a Poisson-drawn length.
// Output is fully determined by params + seed.
TransactionDatabase generate(const GenParams& params);

}  // namespace fpmine

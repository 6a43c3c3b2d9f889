#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cxsim {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kMaxExactNeurons = 64;
inline constexpr unsigned kMaxEnumeratedNeurons = 24;

// Firing-count histogram of a fully interconnected network of n_neurons.
struct StateHistogram {
  unsigned n_neurons = 0;
  std::vector<std::uint64_t> counts;  // counts[n] = configurations with n firing

  BigInt total() const;
};

// C(N, n), exact. Throws DomainError for n > N or N > 64.
BigInt states_with_n_firing(unsigned neurons, unsigned firing);

// Sum of C(N, n) over n = 0..N, including the all-quiet state; equals 2^N.
BigInt total_states(unsigned neurons);

// Visits all 2^N firing configurations. Throws ScaleError for N > 24.
StateHistogram enumerate_states(unsigned neurons);

}  // namespace cxsim

#include "cxsim/combinatorics.hpp"

#include <bit>
#include <string>

#include "cxsim/errors.hpp"

namespace cxsim {

BigInt StateHistogram::total() const {
  BigInt sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

BigInt states_with_n_firing(unsigned neurons, unsigned firing) {
  if (neurons > kMaxExactNeurons)
    throw DomainError("states_with_n_firing: N = " + std::to_string(neurons) + " exceeds 64");
  if (firing > neurons)
    throw DomainError("states_with_n_firing: n = " + std::to_string(firing) + " exceeds N = " + std::to_string(neurons));
  // Each partial product r * (N - n + i) / i is C(N - n + i, i), so the
  // division is exact.
  BigInt r = 1;
  for (unsigned i = 1; i <= firing; ++i) {
    r *= neurons - firing + i;
    r /= i;
  }
  return r;
}

BigInt total_states(unsigned neurons) {
  if (neurons > kMaxExactNeurons)
    throw DomainError("total_states: N = " + std::to_string(neurons) + " exceeds 64");
  BigInt sum = 0;
  for (unsigned n = 0; n <= neurons; ++n) sum += states_with_n_firing(neurons, n);
  return sum;
}

StateHistogram enumerate_states(unsigned neurons) {
  if (neurons > kMaxEnumeratedNeurons)
    throw ScaleError("enumerate_states: N = " + std::to_string(neurons) +
                     " is too large to enumerate (limit 24); use total_states instead");
  StateHistogram hist;
  hist.n_neurons = neurons;
  hist.counts.assign(neurons + 1, 0);
  const std::uint64_t configurations = std::uint64_t{1} << neurons;
  for (std::uint64_t mask = 0; mask < configurations; ++mask) ++hist.counts[std::popcount(mask)];
  return hist;
}

}  // namespace cxsim

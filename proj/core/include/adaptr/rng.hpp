// Copyright 2026 The adaptr authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAPTR_RNG_HPP_
#define ADAPTR_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace adaptr {

// Seeded random stream with a fixed cross-platform draw sequence.
//
// mt19937_64 output is pinned by the standard; every derived draw below is
// implemented by hand (std::uniform_*_distribution and std::shuffle are
// implementation defined and must not be used anywhere in the toolkit).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Inclusive integer range.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Child stream whose sequence is independent of draws taken from *this.
  Rng derive(std::uint64_t stream) const;
  Rng derive(const std::string& tag) const;

  // Fisher-Yates using below(); deterministic for a given seed.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
};

// splitmix64 finalizer; used for seed derivation and stable string hashing.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a, stable across platforms (std::hash is not).
std::uint64_t fnv1a64(const std::string& s);

}  // namespace adaptr

#endif  // ADAPTR_RNG_HPP_

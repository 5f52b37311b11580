#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fairrank {

// mt19937_64 with hand-rolled value mappings. The engine's output sequence is
// pinned by the standard, but the standard distributions are not; mapping draws
// ourselves keeps generated instances byte-identical across platforms and
// library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Inclusive range; modulo mapping (bias is irrelevant for test-data purposes).
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // [0, 1) with 53 significant bits.
  double uniform_real() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  bool coin(double probability) { return uniform_real() < probability; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[uniform_int(0, i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairrank

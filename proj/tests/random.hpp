#pragma once

#include <cstdint>
#include <random>

// Seeded generator for the property tests; every run draws the same cases.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed = 20240917) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

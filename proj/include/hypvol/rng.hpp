#ifndef HYPVOL_RNG_HPP
#define HYPVOL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hypvol {

// All randomness flows through RngStream so results are bit-reproducible
// across platforms: mt19937_64 is fully specified by the standard, and the
// uniform/sphere transforms below avoid the implementation-defined
// std::*_distribution classes.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic sub-seed for a keyed task (e.g. one Monte Carlo angle).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t key_a, std::uint64_t key_b = 0,
                                 std::uint64_t key_c = 0) {
  std::uint64_t s = base;
  std::uint64_t h = splitmix64(s);
  s ^= key_a * 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= key_b + 0xd1b54a32d192ed03ULL;
  h ^= splitmix64(s);
  s ^= key_c + 0x8cb92ba72f3d8dd7ULL;
  h ^= splitmix64(s);
  return h;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1]; safe as a log() argument.
  double uniform_pos() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the polar (Marsaglia) method.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  // Uniform direction on S^{d-1}, d in {2,3,4}. Rejection samplers, no
  // transcendentals in the hot path.
  void sphere_direction(int d, double* out) {
    switch (d) {
      case 2: {
        double u, v, s;
        do {
          u = 2.0 * uniform() - 1.0;
          v = 2.0 * uniform() - 1.0;
          s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        // (u,v)/|.| via the double-angle trick to avoid a sqrt of s alone
        out[0] = (u * u - v * v) / s;
        out[1] = 2.0 * u * v / s;
        return;
      }
      case 3: {
        // Marsaglia 1972
        double u, v, s;
        do {
          u = 2.0 * uniform() - 1.0;
          v = 2.0 * uniform() - 1.0;
          s = u * u + v * v;
        } while (s >= 1.0);
        double f = 2.0 * std::sqrt(1.0 - s);
        out[0] = u * f;
        out[1] = v * f;
        out[2] = 1.0 - 2.0 * s;
        return;
      }
      case 4: {
        // two unit disks, Marsaglia's S^3 construction
        double u1, v1, s1, u2, v2, s2;
        do {
          u1 = 2.0 * uniform() - 1.0;
          v1 = 2.0 * uniform() - 1.0;
          s1 = u1 * u1 + v1 * v1;
        } while (s1 >= 1.0);
        do {
          u2 = 2.0 * uniform() - 1.0;
          v2 = 2.0 * uniform() - 1.0;
          s2 = u2 * u2 + v2 * v2;
        } while (s2 >= 1.0 || s2 == 0.0);
        double f = std::sqrt((1.0 - s1) / s2);
        out[0] = u1;
        out[1] = v1;
        out[2] = u2 * f;
        out[3] = v2 * f;
        return;
      }
      default: {
        // generic gaussian-normalize fallback
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) {
          out[i] = gaussian();
          n2 += out[i] * out[i];
        }
        double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < d; ++i) out[i] *= inv;
        return;
      }
    }
  }

  // Barycentric coordinates uniform on the k-simplex (Dirichlet(1,...,1)).
  void simplex_barycentric(int n, double* out) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      out[i] = -std::log(uniform_pos());
      sum += out[i];
    }
    for (int i = 0; i < n; ++i) out[i] /= sum;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hypvol

#endif

#ifndef ARDEHALI_RANDOM_HPP
#define ARDEHALI_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ardehali/qubit_algebra.hpp"
#include "ardehali/types.hpp"

namespace ardehali {

/// Seeded generator with explicit bit-to-double mappings so identical
/// seeds reproduce identical draws on any platform (mt19937_64 output
/// is pinned by the standard; no distribution objects are used because
/// their algorithms are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in (0, 1], 53-bit resolution.
  double uniform() {
    return double((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller with a cached spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    for (;;) {
      Vec3 v(normal(), normal(), normal());
      double n = v.norm();
      if (n > 1e-12) return v / n;
    }
  }

  /// Haar-distributed SU(2) element via a normalized quaternion.
  Matrix2c haar_unitary() {
    double q[4];
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& qi : q) {
        qi = normal();
        norm2 += qi * qi;
      }
    } while (norm2 < 1e-24);
    double inv = 1.0 / std::sqrt(norm2);
    const Complex i(0, 1);
    return inv * (q[0] * identity2() +
                  i * (q[1] * pauli_x() + q[2] * pauli_y() + q[3] * pauli_z()));
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Image of a direction under conjugation by u: (u (d.sigma) u*) read
/// back into vector components.
inline Vec3 rotate_direction(const Matrix2c& u, const Vec3& d) {
  Matrix2c m = u *
               (d.x() * pauli_x() + d.y() * pauli_y() + d.z() * pauli_z()) *
               u.adjoint();
  return Vec3(0.5 * (pauli_x() * m).trace().real(),
              0.5 * (pauli_y() * m).trace().real(),
              0.5 * (pauli_z() * m).trace().real());
}

}  // namespace ardehali

#endif

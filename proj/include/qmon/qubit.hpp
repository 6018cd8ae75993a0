// Exact linear algebra for a two-level system: pure states, Bloch vectors,
// Pauli operators, closed-form rotations, fidelity.
#pragma once

#include <complex>

#include "qmon/rng.hpp"

namespace qmon {

using complexd = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  Vec3 normalized() const;  // throws std::invalid_argument on the zero vector
};

// Bloch vectors of pure states lie on the unit sphere.
using BlochVector = Vec3;

// |psi> = a|up> + b|down>, normalized: |a|^2 + |b|^2 = 1.
struct PureState {
  complexd a{1.0, 0.0};
  complexd b{0.0, 0.0};

  double norm2() const { return std::norm(a) + std::norm(b); }
  PureState normalized() const;
};

// Row-major 2x2 complex matrix.
struct Operator2 {
  complexd e00, e01, e10, e11;

  static Operator2 identity() { return {{1.0, 0.0}, {}, {}, {1.0, 0.0}}; }

  Operator2 adjoint() const;
  Operator2 operator*(const Operator2& o) const;
  Operator2 operator+(const Operator2& o) const;
  PureState apply(const PureState& s) const;  // result is not renormalized
};

Operator2 operator*(complexd c, const Operator2& m);
inline Operator2 operator*(double c, const Operator2& m) { return complexd(c, 0.0) * m; }

// Max-abs entry of U†U - 1 and of M - M†.
double unitarity_defect(const Operator2& u);
double hermiticity_defect(const Operator2& m);

complexd inner(const PureState& s1, const PureState& s2);  // <s1|s2>

// (<sx>, <sy>, <sz>) of a normalized state; rejects norm deviations > 1e-6.
BlochVector bloch_of(const PureState& s);

// r.sigma for a unit vector r (|r| = 1 within 1e-9).
Operator2 pauli_along(const Vec3& unit_dir);

// exp(-i angle/2 axis.sigma) = cos(angle/2) 1 - i sin(angle/2) axis.sigma.
Operator2 rotation(const Vec3& unit_axis, double angle);

// F = |<s1|s2>|^2; symmetric, 1 iff equal up to global phase.
double fidelity(const PureState& s1, const PureState& s2);

// (-b*, a*): orthogonal companion of a normalized state.
PureState orthogonal_state(const PureState& s);

// Haar-uniform pure state: two complex standard normals, normalized.
PureState haar_random_state(RngStream& rng);

}  // namespace qmon

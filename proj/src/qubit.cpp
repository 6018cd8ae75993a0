#include "qmon/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace qmon {

namespace {

void require_normalized(const PureState& s, const char* who) {
  if (std::abs(std::sqrt(s.norm2()) - 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(who) + ": state is not normalized");
  }
}

void require_unit(const Vec3& v, const char* who) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(who) + ": direction is not a unit vector");
  }
}

}  // namespace

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("Vec3::normalized: zero vector");
  return {x / n, y / n, z / n};
}

PureState PureState::normalized() const {
  const double n = std::sqrt(norm2());
  if (n == 0.0) throw std::invalid_argument("PureState::normalized: zero state");
  return {a / n, b / n};
}

Operator2 Operator2::adjoint() const {
  return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)};
}

Operator2 Operator2::operator*(const Operator2& o) const {
  return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
          e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
}

Operator2 Operator2::operator+(const Operator2& o) const {
  return {e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11};
}

PureState Operator2::apply(const PureState& s) const {
  return {e00 * s.a + e01 * s.b, e10 * s.a + e11 * s.b};
}

Operator2 operator*(complexd c, const Operator2& m) {
  return {c * m.e00, c * m.e01, c * m.e10, c * m.e11};
}

double unitarity_defect(const Operator2& u) {
  const Operator2 p = u.adjoint() * u;
  double d = std::abs(p.e00 - complexd(1.0));
  d = std::max(d, std::abs(p.e01));
  d = std::max(d, std::abs(p.e10));
  return std::max(d, std::abs(p.e11 - complexd(1.0)));
}

double hermiticity_defect(const Operator2& m) {
  double d = std::abs(m.e00 - std::conj(m.e00));
  d = std::max(d, std::abs(m.e01 - std::conj(m.e10)));
  d = std::max(d, std::abs(m.e10 - std::conj(m.e01)));
  return std::max(d, std::abs(m.e11 - std::conj(m.e11)));
}

complexd inner(const PureState& s1, const PureState& s2) {
  return std::conj(s1.a) * s2.a + std::conj(s1.b) * s2.b;
}

BlochVector bloch_of(const PureState& s) {
  require_normalized(s, "bloch_of");
  const complexd c = std::conj(s.a) * s.b;
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(s.a) - std::norm(s.b)};
}

Operator2 pauli_along(const Vec3& unit_dir) {
  require_unit(unit_dir, "pauli_along");
  return {{unit_dir.z, 0.0},
          {unit_dir.x, -unit_dir.y},
          {unit_dir.x, unit_dir.y},
          {-unit_dir.z, 0.0}};
}

Operator2 rotation(const Vec3& unit_axis, double angle) {
  require_unit(unit_axis, "rotation");
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  // c 1 - i s (axis.sigma)
  return {{c, -s * unit_axis.z},
          {-s * unit_axis.y, -s * unit_axis.x},
          {s * unit_axis.y, -s * unit_axis.x},
          {c, s * unit_axis.z}};
}

double fidelity(const PureState& s1, const PureState& s2) {
  require_normalized(s1, "fidelity");
  require_normalized(s2, "fidelity");
  const double f = std::norm(inner(s1, s2));
  if (f > 1.0) return f < 1.0 + 1e-9 ? 1.0 : f;  // absorb roundoff just past 1
  return f;
}

PureState orthogonal_state(const PureState& s) {
  return {-std::conj(s.b), std::conj(s.a)};
}

PureState haar_random_state(RngStream& rng) {
  for (;;) {
    const PureState raw{{rng.normal(), rng.normal()}, {rng.normal(), rng.normal()}};
    if (raw.norm2() > 1e-12) return raw.normalized();
  }
}

}  // namespace qmon

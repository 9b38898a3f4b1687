#include <doctest.h>

#include <cmath>

#include "drkernel/group.hpp"
#include "drkernel/linalg.hpp"
#include "support.hpp"

using namespace drkernel;

namespace {

Vector unit(int n, int i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

Vector coords(const GroupPoint& x) {
  Vector c(x.V.size() + x.Y.size() + 1);
  c << x.V, x.Y, x.a;
  return c;
}

GroupPoint from_coords(const Algebra& alg, const Vector& c) {
  return {c.head(alg.k()), c.segment(alg.k(), alg.m()), c(alg.dim() - 1)};
}

double distance(const GroupPoint& x, const GroupPoint& y) {
  return (coords(x) - coords(y)).cwiseAbs().maxCoeff();
}

// Curve through the identity with velocity E_alpha(e).
GroupPoint one_parameter(const Algebra& alg, int alpha, double t) {
  GroupPoint g = identity_point(alg);
  if (alpha == 0) {
    g.a = std::exp(t);
  } else if (alpha <= alg.k()) {
    g.V(alpha - 1) = t;
  } else {
    g.Y(alpha - 1 - alg.k()) = t;
  }
  return g;
}

}  // namespace

TEST_CASE("multiply: identity element") {
  const Algebra alg = make_algebra(2, 1);
  Sampler rng(3);
  const GroupPoint x = testing::random_point(rng, alg);
  CHECK(distance(multiply(alg, identity_point(alg), x), x) == 0.0);
}

TEST_CASE("multiply: heisenberg e1 * e2") {
  const Algebra h = make_algebra(1, 1);
  const GroupPoint p = multiply(h, {unit(2, 0), Vector::Zero(1), 1.0}, {unit(2, 1), Vector::Zero(1), 1.0});
  CHECK(p.V(0) == 1.0);
  CHECK(p.V(1) == 1.0);
  CHECK(p.Y(0) == 0.5);
  CHECK(p.a == 1.0);
}

TEST_CASE("inverse: formula instances") {
  const Algebra alg = make_algebra(3, 1);
  const Vector V = (Vector(4) << 1.0, -2.0, 0.5, 3.0).finished();
  const Vector Y = (Vector(3) << 0.4, -1.2, 2.0).finished();
  const GroupPoint i1 = inverse(alg, {V, Vector::Zero(3), 4.0});
  CHECK((i1.V + V / 2).norm() == 0.0);
  CHECK(i1.Y.norm() == 0.0);
  CHECK(i1.a == 0.25);
  const GroupPoint i2 = inverse(alg, {Vector::Zero(4), Y, 2.0});
  CHECK(i2.V.norm() == 0.0);
  CHECK((i2.Y + Y / 2.0).norm() == 0.0);
  CHECK(i2.a == 0.5);
}

TEST_CASE("inverse: random round trip") {
  Sampler rng(4);
  for (const AlgebraDescriptor& d : testing::builtin_algebras()) {
    const Algebra alg = make_algebra(d);
    for (int t = 0; t < 20; ++t) {
      const GroupPoint x = testing::random_point(rng, alg);
      CHECK(distance(multiply(alg, x, inverse(alg, x)), identity_point(alg)) < 1e-12);
    }
  }
}

TEST_CASE("validate rejects bad points") {
  const Algebra alg = make_algebra(1, 1);
  CHECK_THROWS_AS(validate(alg, {Vector::Zero(3), Vector::Zero(1), 1.0}), Error);
  CHECK_THROWS_AS(validate(alg, {Vector::Zero(2), Vector::Zero(2), 1.0}), Error);
  CHECK_THROWS_AS(validate(alg, {Vector::Zero(2), Vector::Zero(1), 0.0}), Error);
  CHECK_THROWS_AS(validate(alg, {Vector::Zero(2), Vector::Zero(1), -1.0}), Error);
  CHECK_THROWS_AS(validate(alg, {Vector::Constant(2, NAN), Vector::Zero(1), 1.0}), Error);
  CHECK_NOTHROW(validate(alg, {Vector::Zero(2), Vector::Zero(1), 1.0}));
}

TEST_CASE("lie_bracket_s: instances") {
  const Algebra h = make_algebra(1, 1);
  const AlgebraElement A{Vector::Zero(2), Vector::Zero(1), 1.0};
  const Vector Vp = (Vector(2) << 0.3, -0.8).finished();
  const AlgebraElement r1 = lie_bracket_s(h, A, {Vp, Vector::Zero(1), 0.0});
  CHECK((r1.v - 0.5 * Vp).norm() == 0.0);
  CHECK(r1.y.norm() == 0.0);
  CHECK(r1.t == 0.0);

  const AlgebraElement xi{Vp, Vector::Constant(1, 0.7), 1.3};
  const AlgebraElement r2 = lie_bracket_s(h, xi, xi);
  CHECK(r2.v.norm() == 0.0);
  CHECK(r2.y.norm() == 0.0);
  CHECK(r2.t == 0.0);

  const AlgebraElement r3 = lie_bracket_s(h, basis_element(h, 1), basis_element(h, 2));
  CHECK(r3.v.norm() == 0.0);
  CHECK(r3.y(0) == 1.0);
  CHECK(r3.t == 0.0);
}

TEST_CASE("lie_bracket_s: Jacobi identity") {
  Sampler rng(6);
  for (const AlgebraDescriptor& d : testing::builtin_algebras()) {
    const Algebra alg = make_algebra(d);
    auto draw = [&] { return AlgebraElement{rng.box(alg.k(), 1.0), rng.box(alg.m(), 1.0), rng.uniform(-1, 1)}; };
    for (int t = 0; t < 10; ++t) {
      const AlgebraElement x = draw(), y = draw(), z = draw();
      const FrameVector s = to_frame(lie_bracket_s(alg, x, lie_bracket_s(alg, y, z))) +
                            to_frame(lie_bracket_s(alg, y, lie_bracket_s(alg, z, x))) +
                            to_frame(lie_bracket_s(alg, z, lie_bracket_s(alg, x, y)));
      CHECK(s.cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("frame at the identity and on the a-axis") {
  const Algebra alg = make_algebra(2, 1);
  const Matrix E = frame_at(alg, identity_point(alg));
  for (int i = 0; i < alg.k(); ++i) CHECK((E.col(1 + i) - unit(alg.dim(), i)).norm() == 0.0);
  for (int r = 0; r < alg.m(); ++r) CHECK((E.col(1 + alg.k() + r) - unit(alg.dim(), alg.k() + r)).norm() == 0.0);
  CHECK((E.col(0) - unit(alg.dim(), alg.dim() - 1)).norm() == 0.0);
  const Matrix Ea = frame_at(alg, {Vector::Zero(4), Vector::Zero(2), 3.5});
  CHECK(Ea(alg.dim() - 1, 0) == 3.5);
}

TEST_CASE("frame is left invariant") {
  Sampler rng(8);
  const double h = 1e-5;
  for (const AlgebraDescriptor& d : testing::builtin_algebras()) {
    const Algebra alg = make_algebra(d);
    for (int t = 0; t < 5; ++t) {
      const GroupPoint x = testing::random_point(rng, alg);
      const Matrix E = frame_at(alg, x);
      for (int alpha = 0; alpha < alg.dim(); ++alpha) {
        const Vector plus = coords(multiply(alg, x, one_parameter(alg, alpha, h)));
        const Vector minus = coords(multiply(alg, x, one_parameter(alg, alpha, -h)));
        CHECK(((plus - minus) / (2 * h) - E.col(alpha)).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }
}

TEST_CASE("coordinate brackets of the frame match the algebra bracket") {
  Sampler rng(10);
  const double h = 1e-6;
  for (const AlgebraDescriptor& d : testing::builtin_algebras()) {
    const Algebra alg = make_algebra(d);
    const int n = alg.dim();
    const GroupPoint x = testing::random_point(rng, alg);
    const Matrix E = frame_at(alg, x);
    // dE[c] = derivative of the frame matrix along coordinate c
    std::vector<Matrix> dE;
    for (int c = 0; c < n; ++c) {
      Vector p = coords(x), q = coords(x);
      p(c) += h;
      q(c) -= h;
      dE.push_back((frame_at(alg, from_coords(alg, p)) - frame_at(alg, from_coords(alg, q))) / (2 * h));
    }
    for (int al = 0; al < n; ++al) {
      for (int be = 0; be < n; ++be) {
        Vector br = Vector::Zero(n);
        for (int c = 0; c < n; ++c) br += E(c, al) * dE[c].col(be) - E(c, be) * dE[c].col(al);
        const FrameVector want = to_frame(lie_bracket_s(alg, basis_element(alg, al), basis_element(alg, be)));
        CHECK((br - E * want).cwiseAbs().maxCoeff() < 1e-7);
      }
    }
  }
}

TEST_CASE("connection table instances") {
  const Algebra alg = make_algebra(3, 1);
  const int k = alg.k(), n = alg.dim();
  for (int b = 0; b < n; ++b) CHECK(connection_coeffs(alg, 0, b).norm() == 0.0);
  for (int r = 1; r <= alg.m(); ++r) CHECK((connection_coeffs(alg, k + r, 0) + unit(n, k + r)).norm() == 0.0);
  for (int i = 1; i <= k; ++i) CHECK((connection_coeffs(alg, i, i) - 0.5 * unit(n, 0)).norm() == 0.0);
  for (int i = 1; i <= k; ++i) CHECK((connection_coeffs(alg, i, 0) + 0.5 * unit(n, i)).norm() == 0.0);
  CHECK((connection_coeffs(alg, k + 1, k + 1) - unit(n, 0)).norm() == 0.0);
  CHECK(connection_coeffs(alg, k + 1, k + 2).norm() == 0.0);
}

TEST_CASE("group axiom suite") {
  std::uint64_t seed = 100;
  for (const AlgebraDescriptor& d : testing::builtin_algebras()) {
    const GroupAxiomReport rep = check_group_axioms(make_algebra(d), 200, seed++);
    CHECK(rep.trials == 200);
    CHECK(rep.identity < 1e-12);
    CHECK(rep.associativity < 1e-12);
    CHECK(rep.inverse < 1e-12);
    CHECK(rep.metric_compatibility < 1e-12);
    CHECK(rep.torsion < 1e-12);
  }
  CHECK_THROWS_AS(check_group_axioms(make_algebra(1, 1), 0, 1), Error);
}

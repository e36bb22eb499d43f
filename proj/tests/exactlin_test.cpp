#include <gtest/gtest.h>

#include <mkit/exactlin.hpp>

#include <random>

using namespace mkit;
using namespace mkit::exactlin;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vector ints(FieldSpec f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

Matrix random_matrix(std::mt19937& rng, FieldSpec f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<long> d(-2, 2);
  std::bernoulli_distribution sparse(0.4);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!sparse(rng)) m(i, j) = Scalar(f, d(rng));
  return m;
}

// Enumerates every vector of GF(p)^n.
template <class Fn>
void for_each_vector(FieldSpec f, std::size_t n, Fn&& fn) {
  const long p = f.characteristic();
  std::vector<long> digits(n, 0);
  while (true) {
    Vector v;
    for (long d : digits) v.emplace_back(f, d);
    fn(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TEST(FieldSpec, RejectsNonPrimes) {
  EXPECT_THROW(FieldSpec::prime(4), Error);
  EXPECT_THROW(FieldSpec::prime(1), Error);
  EXPECT_THROW(FieldSpec::prime(2147483659ULL), Error);
  EXPECT_EQ(FieldSpec::prime(2147483647ULL).characteristic(), 2147483647u);
  EXPECT_EQ(FieldSpec::parse("Fp:5"), FieldSpec::prime(5));
  EXPECT_EQ(FieldSpec::parse("Q"), Q);
  EXPECT_THROW(FieldSpec::parse("Fp:x"), ParseError);
}

TEST(Scalar, RationalsAreCanonical) {
  Scalar a = Scalar::parse(Q, "6/4");
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ(Scalar::parse(Q, "-10/5").to_string(), "-2");
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), ParseError);
  EXPECT_THROW(Scalar::parse(Q, "1/-2"), ParseError);
  EXPECT_THROW(Scalar::parse(Q, "abc"), ParseError);
}

TEST(Scalar, ResiduesAreReduced) {
  const FieldSpec F7 = FieldSpec::prime(7);
  EXPECT_EQ(Scalar(F7, -1).residue(), 6u);
  EXPECT_EQ(Scalar::parse(F7, "15").residue(), 1u);
  EXPECT_EQ((Scalar(F7, 3) * Scalar(F7, 3).inverse()).residue(), 1u);
  EXPECT_EQ(Scalar(F7, 1, 2).residue(), 4u);
  EXPECT_THROW(Scalar(F7, 0).inverse(), Error);
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar(Q, 1) + Scalar(FieldSpec::prime(2), 1), FieldMismatch);
  Matrix a = Matrix::identity(Q, 2);
  Matrix b = Matrix::identity(FieldSpec::prime(3), 2);
  EXPECT_THROW(a * b, FieldMismatch);
  EXPECT_THROW(kron(a, b), FieldMismatch);
  EXPECT_THROW(Matrix(Q, 1, 1, {Scalar(FieldSpec::prime(3), 1)}), FieldMismatch);
}

TEST(Rref, ZeroIdentityAndHandExample) {
  auto [z, zp] = rref(Matrix(Q, 2, 2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(zp.empty());

  auto [id, idp] = rref(Matrix::identity(Q, 2));
  EXPECT_EQ(id, Matrix::identity(Q, 2));
  EXPECT_EQ(idp, (std::vector<std::size_t>{0, 1}));

  auto [m, mp] = rref(Matrix::from_rows(Q, {{2, 4}, {1, 2}}));
  EXPECT_EQ(m, Matrix::from_rows(Q, {{1, 2}, {0, 0}}));
  EXPECT_EQ(mp, (std::vector<std::size_t>{0}));
}

TEST(Rref, Idempotent) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    FieldSpec f = trial % 2 ? Q : FieldSpec::prime(5);
    Matrix m = random_matrix(rng, f, 1 + rng() % 5, 1 + rng() % 6);
    auto once = rref(m).first;
    EXPECT_EQ(rref(once).first, once);
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(Q, 3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(Q, 2, 3)).dim(), 3u);
  const FieldSpec F2 = FieldSpec::prime(2);
  Subspace k = kernel(Matrix::from_rows(F2, {{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis_vector(0), ints(F2, {1, 1}));
}

TEST(Kernel, RankNullity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = trial % 3 == 0 ? FieldSpec::prime(2) : (trial % 3 == 1 ? FieldSpec::prime(3) : Q);
    Matrix m = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 6);
    Subspace k = kernel(m);
    EXPECT_EQ(rref(m).second.size() + k.dim(), m.cols());
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.basis_vector(i)));
    AffineSystem sys(f, m.cols());
    sys.add_homogeneous_block(m);
    EXPECT_EQ(sys.rank(), rref(m).second.size());
  }
}

TEST(SolveAffine, Examples) {
  auto s = solve_affine(Matrix::identity(Q, 1), ints(Q, {5}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, ints(Q, {5}));
  EXPECT_EQ(s->homogeneous.dim(), 0u);

  const FieldSpec F2 = FieldSpec::prime(2);
  auto t = solve_affine(Matrix::from_rows(F2, {{1, 1}}), ints(F2, {1}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->particular, ints(F2, {1, 0}));
  ASSERT_EQ(t->homogeneous.dim(), 1u);
  EXPECT_EQ(t->homogeneous.basis_vector(0), ints(F2, {1, 1}));

  EXPECT_FALSE(solve_affine(Matrix(Q, 1, 1), ints(Q, {1})));
  EXPECT_THROW(solve_affine(Matrix(Q, 2, 1), ints(Q, {1})), DimensionError);
}

TEST(SolveAffine, SolutionsSatisfyTheSystem) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
    Matrix m = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 6);
    Vector b;
    for (std::size_t i = 0; i < m.rows(); ++i) b.emplace_back(f, static_cast<long>(rng() % 5) - 2);
    auto sol = solve_affine(m, b);
    // Independent route: compare ranks of m and [m | b] via dense rref.
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
      aug(i, m.cols()) = b[i];
    }
    const bool consistent = rref(m).second.size() == rref(aug).second.size();
    ASSERT_EQ(sol.has_value(), consistent);
    if (!sol) continue;
    EXPECT_EQ(m * sol->particular, b);
    for (std::size_t i = 0; i < sol->homogeneous.dim(); ++i)
      EXPECT_TRUE(is_zero(m * sol->homogeneous.basis_vector(i)));
    EXPECT_EQ(sol->homogeneous, kernel(m));
  }
}

TEST(SolveAffine, AgreesWithEnumerationOverSmallPrimeFields) {
  std::mt19937 rng(5);
  for (long p : {2L, 3L, 5L, 7L}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % (p == 7 ? 3 : 4);
      Matrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(f, static_cast<long>(rng() % p));
      Vector b;
      for (std::size_t i = 0; i < rows; ++i) b.emplace_back(f, static_cast<long>(rng() % p));
      std::size_t count = 0, kernel_count = 0;
      for_each_vector(f, cols, [&](const Vector& v) {
        if (m * v == b) ++count;
        if (is_zero(m * v)) ++kernel_count;
      });
      auto sol = solve_affine(m, b);
      EXPECT_EQ(sol.has_value(), count > 0);
      if (sol) {
        std::size_t expected = 1;
        for (std::size_t i = 0; i < sol->homogeneous.dim(); ++i) expected *= static_cast<std::size_t>(p);
        EXPECT_EQ(count, expected);
        EXPECT_EQ(kernel_count, expected);
      }
    }
  }
}

TEST(Membership, Examples) {
  Subspace s = Subspace::span(Q, 2, {ints(Q, {1, 1})});
  EXPECT_TRUE(membership(ints(Q, {0, 0}), s));
  EXPECT_FALSE(membership(ints(Q, {1, 0}), s));
  EXPECT_TRUE(membership(ints(Q, {2, 2}), s));
  EXPECT_THROW(membership(ints(Q, {1}), s), DimensionError);
  EXPECT_TRUE(membership(ints(Q, {0, 0}), Subspace::zero(Q, 2)));
}

TEST(QuotientSpace, Examples) {
  QuotientSpace trivial = quotient_space(3, Subspace::zero(Q, 3));
  EXPECT_EQ(trivial.projection(), Matrix::identity(Q, 3));
  EXPECT_EQ(trivial.section(), Matrix::identity(Q, 3));

  QuotientSpace line = quotient_space(2, Subspace::span(Q, 2, {ints(Q, {1, -1})}));
  EXPECT_EQ(line.dim(), 1u);
  EXPECT_TRUE(is_zero(line.project(ints(Q, {1, -1}))));

  EXPECT_EQ(quotient_space(2, Subspace::full(Q, 2)).dim(), 0u);
  EXPECT_THROW(quotient_space(3, Subspace::zero(Q, 2)), DimensionError);
}

TEST(QuotientSpace, ProjectionSectionInvariants) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    FieldSpec f = trial % 2 ? Q : FieldSpec::prime(3);
    const std::size_t n = 1 + rng() % 6;
    Matrix gens = random_matrix(rng, f, rng() % 4, n);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < gens.rows(); ++i) vs.push_back(gens.row_vector(i));
    Subspace rel = Subspace::span(f, n, vs);
    QuotientSpace qs = quotient_space(n, rel);
    EXPECT_EQ(qs.dim(), n - rel.dim());
    EXPECT_EQ(qs.projection() * qs.section(), Matrix::identity(f, qs.dim()));
    for (std::size_t i = 0; i < rel.dim(); ++i) EXPECT_TRUE(is_zero(qs.project(rel.basis_vector(i))));
    EXPECT_EQ(kernel(qs.projection()), rel);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), Matrix::identity(Q, 6));
  EXPECT_TRUE(kron(Matrix::from_rows(Q, {{1, 2}}), Matrix(Q, 2, 2)).is_zero());
  EXPECT_EQ(kron(Matrix::from_rows(Q, {{1, 2}}), Matrix::from_rows(Q, {{3}, {4}})),
            Matrix::from_rows(Q, {{3, 6}, {4, 8}}));
}

TEST(Linearize, MatchesExplicitSystem) {
  std::mt19937 rng(17);
  Matrix m = random_matrix(rng, Q, 4, 5);
  Vector b = ints(Q, {1, 0, -1, 2});
  AffineSystem probed = linearize(Q, 5, [&](const Vector& x) { return sub(m * x, b); });
  EXPECT_LE(probed.equations(), 4u);
  auto direct = solve_affine(m, b);
  auto via_probe = probed.solve();
  ASSERT_EQ(direct.has_value(), via_probe.has_value());
  if (direct) {
    EXPECT_EQ(direct->particular, via_probe->particular);
    EXPECT_EQ(direct->homogeneous, via_probe->homogeneous);
  }
}

TEST(AffineSystem, RejectsOversizedSystems) {
  EXPECT_THROW(AffineSystem(Q, kMaxUnknowns + 1), DimensionError);
  AffineSystem sys(Q, 2);
  EXPECT_THROW(sys.add_equation(SparseRow{{5, Scalar(Q, 1)}}, Scalar(Q, 0)), DimensionError);
}

#include <random>

#include <gtest/gtest.h>

#include "lfd/eigen.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/poly_io.hpp"
#include "lfd/qmatrix.hpp"
#include "lfd/sparse.hpp"
#include "lfd/upoly.hpp"

using namespace lfd;

namespace {

const std::vector<std::string> xy{"x", "y"};

MPoly random_homogeneous(std::mt19937& rng, std::size_t n, int d, int max_terms = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  const auto basis = monomial_basis(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  MPoly p(n);
  for (int k = 0; k < max_terms; ++k) p.add_term(basis[pick(rng)], coeff(rng));
  return p;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> v(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v(rng);
  }
  return m;
}

}  // namespace

TEST(Parse, SingleMonomial) {
  const MPoly p = parse_poly("x*y", xy);
  EXPECT_EQ(p.size(), 1U);
  EXPECT_EQ(p.coeff({1, 1}), 1);
}

TEST(Parse, BinomialExpansion) {
  EXPECT_EQ(to_string(parse_poly("(x+y)^2", xy), xy), "x^2 + 2*x*y + y^2");
}

TEST(Parse, MinorOfStarQuiver) {
  const std::vector<std::string> v{"a", "b", "c", "d", "e", "f"};
  const MPoly p = parse_poly("a*e-b*d", v);
  EXPECT_EQ(p.size(), 2U);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
}

TEST(Parse, RationalCoefficientsAndDivision) {
  EXPECT_EQ(to_string(parse_poly("x/2 - 3/4*y", xy), xy), "1/2*x - 3/4*y");
  EXPECT_EQ(to_string(parse_poly("-(x - y)*(x + y)", xy), xy), "-x^2 + y^2");
  EXPECT_EQ(to_string(parse_poly("0*x", xy), xy), "0");
}

TEST(Parse, Errors) {
  try {
    parse_poly("x + * y", xy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Syntax);
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
  try {
    parse_poly("x + z", xy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
  }
  EXPECT_THROW(parse_poly("(x + y", xy), Error);
  EXPECT_THROW(parse_poly("x / y", xy), Error);
}

TEST(Parse, RoundTripRandom) {
  std::mt19937 rng(11);
  const auto vars = default_variable_names(4);
  for (int k = 0; k < 100; ++k) {
    const MPoly p = random_homogeneous(rng, 4, k % 5, 6) + random_homogeneous(rng, 4, (k + 2) % 4, 3);
    EXPECT_EQ(parse_poly(to_string(p, vars), vars), p);
  }
}

TEST(MPolyOps, DerivativeProductComponents) {
  EXPECT_EQ(parse_poly("x^2*y", xy).derivative(0), parse_poly("2*x*y", xy));
  EXPECT_EQ(parse_poly("x+y", xy) * parse_poly("x-y", xy), parse_poly("x^2-y^2", xy));
  const auto comps = parse_poly("x^2+x", xy).homogeneous_components();
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps.at(2), parse_poly("x^2", xy));
  EXPECT_EQ(comps.at(1), parse_poly("x", xy));
}

TEST(MPolyOps, MismatchedVariables) {
  EXPECT_THROW(MPoly::variable(2, 0) + MPoly::variable(3, 0), Error);
  EXPECT_THROW(MPoly::variable(2, 0) * MPoly::variable(3, 0), Error);
}

TEST(MPolyOps, LeibnizAndDegreeProperty) {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const MPoly p = random_homogeneous(rng, 3, 1 + k % 4);
    const MPoly q = random_homogeneous(rng, 3, k % 3);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    EXPECT_TRUE((p * q).is_homogeneous());
    const std::size_t i = static_cast<std::size_t>(k % 3);
    EXPECT_EQ((p * q).derivative(i), p.derivative(i) * q + p * q.derivative(i));
    const MPoly dp = p.derivative(i);
    if (!dp.is_zero()) EXPECT_EQ(dp.degree(), p.degree() - 1);
  }
}

TEST(MonomialBasis, CountsAndOrder) {
  const auto b = monomial_basis(2, 2);
  ASSERT_EQ(b.size(), 3U);
  EXPECT_EQ(b[0], (Exponents{2, 0}));
  EXPECT_EQ(b[1], (Exponents{1, 1}));
  EXPECT_EQ(b[2], (Exponents{0, 2}));
  EXPECT_EQ(monomial_basis(1, 5), (std::vector<Exponents>{{5}}));
  EXPECT_EQ(monomial_basis(6, 6).size(), 462U);
}

TEST(Linear, Solve) {
  const auto x = solve_linear(QMatrix::identity(2), {1, 2});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (QVector{1, 2}));
  QMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  const auto y = solve_linear(a, {3});
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, (QVector{3, 0}));
  QMatrix z(2, 1);
  z(0, 0) = 1;
  z(1, 0) = 1;
  EXPECT_FALSE(solve_linear(z, {1, 2}));
}

TEST(Linear, KernelCanonical) {
  QMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = -1;
  const auto k = kernel_basis(a);
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0], (QVector{1, 1}));
}

TEST(Linear, RankNullityProperty) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
    QMatrix a = random_matrix(rng, r, c, -1, 1);
    const auto ker = kernel_basis(a);
    EXPECT_EQ(rank(a) + ker.size(), c);
    for (const auto& v : ker) {
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += a(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Linear, SparseEchelonMatchesDense) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 2 + t % 5, c = 1 + (t / 3) % 7;
    QMatrix a = random_matrix(rng, r, c, -1, 1);
    ColumnEchelon ech(r);
    for (std::size_t j = 0; j < c; ++j) {
      SparseVector col;
      for (std::size_t i = 0; i < r; ++i) {
        if (a(i, j) != 0) col.emplace(i, a(i, j));
      }
      ech.add_column(col);
    }
    const RowEchelon dense = rref(a);
    EXPECT_EQ(ech.pivot_columns(), dense.pivot_cols);
    const QVector b = random_matrix(rng, 1, r).row(0);
    SparseVector rhs;
    for (std::size_t i = 0; i < r; ++i) {
      if (b[i] != 0) rhs.emplace(i, b[i]);
    }
    const auto sparse_sol = ech.solve(rhs);
    const auto dense_sol = solve_linear(a, b);
    ASSERT_EQ(sparse_sol.has_value(), dense_sol.has_value());
    if (dense_sol) {
      QVector x(c);
      for (const auto& [j, v] : *sparse_sol) x[j] = v;
      EXPECT_EQ(x, *dense_sol);
    }
  }
}

TEST(CharPoly, Examples) {
  QMatrix nil(2, 2);
  nil(1, 0) = 1;
  EXPECT_EQ(char_poly(nil), QPoly({0, 0, 1}));
  QMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  EXPECT_EQ(char_poly(d), QPoly::linear_factor(2) * QPoly::linear_factor(3));
  EXPECT_THROW(char_poly(QMatrix(2, 3)), Error);
}

TEST(CharPoly, SimilarityInvarianceProperty) {
  std::mt19937 rng(9);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 1 + done % 5;
    const QMatrix a = random_matrix(rng, n, n);
    const QMatrix p = random_matrix(rng, n, n);
    const auto pinv = inverse(p);
    if (!pinv) continue;
    EXPECT_EQ(char_poly(*pinv * a * p), char_poly(a));
    ++done;
  }
}

TEST(Eigen, Examples) {
  QMatrix nil(2, 2);
  nil(1, 0) = 1;
  auto es = rational_eigenstructure(nil);
  ASSERT_EQ(es.chains.size(), 1U);
  EXPECT_EQ(es.chains[0].eigenvalue, 0);
  EXPECT_EQ(es.chains[0].vectors.size(), 2U);

  es = rational_eigenstructure(QMatrix::identity(2));
  ASSERT_EQ(es.chains.size(), 2U);
  EXPECT_EQ(es.chains[0].eigenvalue, 1);

  QMatrix comp(2, 2);  // companion of (s+1)(s-1) = s^2 - 1
  comp(1, 0) = 1;
  comp(0, 1) = 1;
  es = rational_eigenstructure(comp);
  ASSERT_EQ(es.chains.size(), 2U);
  EXPECT_EQ(es.chains[0].eigenvalue, -1);
  EXPECT_EQ(es.chains[1].eigenvalue, 1);

  QMatrix rot(2, 2);
  rot(1, 0) = 1;
  rot(0, 1) = -1;
  try {
    rational_eigenstructure(rot);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRationalSpectrum);
  }
}

TEST(Eigen, ReassemblyProperty) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> ev(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 5;
    // conjugate a random Jordan-like upper triangular matrix
    QMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      j(i, i) = ev(rng) / 2;
      if (i + 1 < n) j(i, i + 1) = t % 2;
    }
    QMatrix p = random_matrix(rng, n, n);
    auto pinv = inverse(p);
    if (!pinv) {
      p = QMatrix::identity(n);
      pinv = p;
    }
    const QMatrix a = p * j * *pinv;
    const Eigenstructure es = rational_eigenstructure(a);
    const QMatrix u = es.basis(n);
    const auto uinv = inverse(u);
    ASSERT_TRUE(uinv);
    EXPECT_EQ(*uinv * a * u, es.jordan_form(n));
  }
}

TEST(BPolyTest, FactoredString) {
  const BPoly b = BPoly::from_roots({{Rational(-4, 3), 1}, {Rational(-1), 4}, {Rational(-2, 3), 1}});
  EXPECT_EQ(b.factored_string(), "(s + 4/3)*(s + 1)^4*(s + 2/3)");
  EXPECT_EQ(BPoly::from_poly(b.poly), b);
  EXPECT_EQ(BPoly::from_roots({{Rational(0), 2}}).factored_string(), "s^2");
  EXPECT_THROW(BPoly::from_poly(QPoly({1, 0, 1})), Error);
}

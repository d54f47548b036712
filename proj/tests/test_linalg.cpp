#include <random>

#include "doctest.h"
#include "sepsos/linalg.hpp"

using namespace sepsos;

namespace {

GQ gq(long num, long den = 1) { return GQ(mpq_class(num, den)); }
GQ gqi(long re_n, long re_d, long im_n, long im_d) {
  return GQ(mpq_class(re_n, re_d), mpq_class(im_n, im_d));
}

QHerm herm_from(const std::vector<std::vector<GQ>>& rows) {
  QMat m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return QHerm(std::move(m));
}

// Deterministic random rational Hermitian matrix with entries num/den,
// num in [-9, 9], den in {1, 2, 3}.
QHerm random_rational_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = gq(num(rng), den(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      GQ x(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
      m(i, j) = x;
      m(j, i) = x.conj();
    }
  }
  return QHerm(std::move(m));
}

GQ quad_form(const QHerm& m, const std::vector<GQ>& v) {
  GQ s;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s += conj_val(v[i]) * m(i, j) * v[j];
  return s;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("eigenvalues of small closed forms") {
  SUBCASE("2x2 identity") {
    auto ev = hermitian_eigenvalues(CHerm::identity(2));
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("off-diagonal flip") {
    CMat m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    auto ev = hermitian_eigenvalues(CHerm(std::move(m)));
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("genuinely complex 2x2") {
    // [[0, -i], [i, 0]] has eigenvalues -1, 1
    CMat m(2, 2);
    m(0, 1) = Cplx(0, -1);
    m(1, 0) = Cplx(0, 1);
    auto ev = hermitian_eigenvalues(CHerm(std::move(m)));
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalue moments match trace identities") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 6;
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = dist(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        Cplx x(dist(rng), dist(rng));
        m(i, j) = x;
        m(j, i) = std::conj(x);
      }
    }
    CHerm h(m);
    auto ev = hermitian_eigenvalues(h);
    double tr = 0, fr = 0;
    for (double l : ev) {
      tr += l;
      fr += l * l;
    }
    double tr_ref = 0;
    for (std::size_t i = 0; i < n; ++i) tr_ref += h(i, i).real();
    CHECK(tr == doctest::Approx(tr_ref).epsilon(1e-10));
    CHECK(fr == doctest::Approx(h.mat().frobenius_sq()).epsilon(1e-10));
  }
}

TEST_CASE("jacobi_sym_eig reconstructs the matrix") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::size_t n = 9;
  Mat<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = dist(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = dist(rng);
      a(j, i) = a(i, j);
    }
  }
  auto eig = jacobi_sym_eig(a, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double rec = 0;
      for (std::size_t k = 0; k < n; ++k)
        rec += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      CHECK(rec == doctest::Approx(a(i, j)).epsilon(1e-9));
    }
}

TEST_CASE("rational_psd_check on fixed instances") {
  SUBCASE("negative identity gives a violating vector") {
    auto w = rational_psd_check(herm_from({{gq(-1), gq(0)}, {gq(0), gq(-1)}}));
    REQUIRE_FALSE(w.psd);
    CHECK(sgn(w.violation_value) < 0);
  }
  SUBCASE("[[1,2],[2,1]] is refuted with value -2") {
    auto m = herm_from({{gq(1), gq(2)}, {gq(2), gq(1)}});
    auto w = rational_psd_check(m);
    REQUIRE_FALSE(w.psd);
    // Independent oracle: direct expansion of (1,-1)^T M (1,-1).
    GQ direct = quad_form(m, {gq(1), gq(-1)});
    CHECK(direct.re == mpq_class(-2));
    CHECK(quad_form(m, w.violating_vector).re == w.violation_value);
    CHECK(sgn(w.violation_value) < 0);
  }
  SUBCASE("semidefinite zero pivot: [[0,1],[1,0]] embedded in PSD padding") {
    auto m = herm_from({{gq(0), gq(1), gq(0)},
                        {gq(1), gq(0), gq(0)},
                        {gq(0), gq(0), gq(5)}});
    auto w = rational_psd_check(m);
    REQUIRE_FALSE(w.psd);
    CHECK(sgn(quad_form(m, w.violating_vector).re) < 0);
  }
  SUBCASE("rank-deficient PSD matrix factors exactly") {
    // vv^dagger with v = (1, 1+i/2, -2/3)
    std::vector<GQ> v = {gq(1), gqi(1, 1, 1, 2), gq(-2, 3)};
    QMat m = outer(v);
    auto w = rational_psd_check(QHerm(m));
    REQUIRE(w.psd);
    CHECK(w.reconstruct() == m);
  }
  SUBCASE("zero matrix is PSD") {
    auto w = rational_psd_check(QHerm::zero(3));
    REQUIRE(w.psd);
    CHECK(w.reconstruct() == QMat(3, 3));
  }
}

TEST_CASE("psd witnesses re-verify on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 7;
    QHerm m = random_rational_hermitian(rng, n);
    auto w = rational_psd_check(m);
    if (w.psd) {
      CHECK(w.reconstruct() == m.mat());
      for (const auto& d : w.diag) CHECK(sgn(d) >= 0);
    } else {
      GQ val = quad_form(m, w.violating_vector);
      CHECK(val.im == 0);
      CHECK(sgn(val.re) < 0);
      CHECK(val.re == w.violation_value);
    }
  }
}

TEST_CASE("exact and floating PSD decisions agree away from the boundary") {
  // Spec pins 200 trials, dims 2-8, agreement whenever |min eig| > 1e-6.
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 7;
    QHerm m = random_rational_hermitian(rng, n);
    auto ev = hermitian_eigenvalues(to_floating(m));
    if (std::fabs(ev.front()) <= 1e-6) continue;
    ++checked;
    auto w = rational_psd_check(m);
    CHECK(w.psd == (ev.front() > 0));
  }
  CHECK(checked > 150);
}

TEST_CASE("block PSD equivalence [[A,B],[B,A]] vs A-B, A+B") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 2 + trial % 4;
    QMat a(r, r), b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        a(i, j) = gq(num(rng));
        a(j, i) = a(i, j);
        b(i, j) = gq(num(rng));
        b(j, i) = b(i, j);
      }
    QMat blk(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        blk(i, j) = a(i, j);
        blk(r + i, r + j) = a(i, j);
        blk(i, r + j) = b(i, j);
        blk(r + i, j) = b(i, j);
      }
    bool big = rational_psd_check(QHerm(blk)).psd;
    bool minus = rational_psd_check(QHerm(a - b)).psd;
    bool plus = rational_psd_check(QHerm(a + b)).psd;
    CHECK(big == (minus && plus));
  }
}

TEST_CASE("solve_linear_exact basics") {
  SUBCASE("identity system") {
    QMat a = QMat::identity(3);
    auto r = solve_linear_exact(a, {gq(1), gq(0), gq(0)});
    REQUIRE(r.unique());
    CHECK(r.particular[0] == gq(1));
    CHECK(r.particular[1] == gq(0));
  }
  SUBCASE("one equation, two unknowns") {
    QMat a(1, 2);
    a(0, 0) = gq(1);
    a(0, 1) = gq(1);
    auto r = solve_linear_exact(a, {gq(0)});
    REQUIRE(r.consistent);
    REQUIRE(r.kernel.size() == 1);
    // kernel spanned by (1, -1)
    CHECK(r.kernel[0][0] * gq(-1) == r.kernel[0][1]);
  }
  SUBCASE("inconsistent") {
    QMat a(2, 1);
    a(0, 0) = gq(1);
    a(1, 0) = gq(1);
    auto r = solve_linear_exact(a, {gq(1), gq(2)});
    CHECK_FALSE(r.consistent);
  }
  SUBCASE("complex coefficients") {
    QMat a(1, 1);
    a(0, 0) = gqi(0, 1, 1, 1);  // i
    auto r = solve_linear_exact(a, {gq(1)});
    REQUIRE(r.unique());
    CHECK(r.particular[0] == gqi(0, 1, -1, 1));  // 1/i = -i
  }
}

TEST_CASE("solve_linear_exact solutions verify on random systems") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 3) % 6;
    QMat a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = gqi(num(rng), 1, num(rng), 2);
    std::vector<GQ> b(rows);
    for (auto& x : b) x = gq(num(rng));
    auto r = solve_linear_exact(a, b);
    if (!r.consistent) continue;
    auto apply = [&](const std::vector<GQ>& x) {
      std::vector<GQ> y(rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) y[i] += a(i, j) * x[j];
      return y;
    };
    auto res = apply(r.particular);
    for (std::size_t i = 0; i < rows; ++i) CHECK(res[i] == b[i]);
    for (const auto& k : r.kernel) {
      auto kr = apply(k);
      for (std::size_t i = 0; i < rows; ++i) CHECK(kr[i].is_zero());
    }
  }
}

TEST_CASE("hermitian matrix validation") {
  CMat bad(2, 2);
  bad(0, 1) = Cplx(1, 0);
  bad(1, 0) = Cplx(0.5, 0);
  CHECK_THROWS_AS(CHerm{bad}, std::invalid_argument);
  QMat qbad(2, 2);
  qbad(0, 1) = GQ(1);
  CHECK_THROWS_AS(QHerm{qbad}, std::invalid_argument);
  CMat rect(2, 3);
  CHECK_THROWS_AS(CHerm{rect}, std::invalid_argument);
}

}  // TEST_SUITE

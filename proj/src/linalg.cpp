#include "sepsos/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sepsos {

// ---- Jacobi -----------------------------------------------------------------

SymEig jacobi_sym_eig(Mat<double> a, bool want_vectors) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("jacobi_sym_eig: non-square input");
  Mat<double> v = want_vectors ? Mat<double>::identity(n) : Mat<double>();

  double norm = std::sqrt(a.frobenius_sq());
  const double stop = 1e-14 * std::max(norm, 1e-300);

  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    if (std::sqrt(off) < stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp - s * (vkq + tau * vkp);
            v(k, q) = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
  }

  SymEig out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = out.values[order[i]];
  out.values = std::move(sorted);
  if (want_vectors) {
    out.vectors = Mat<double>(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CHerm& m) {
  const std::size_t n = m.dim();
  bool real_only = true;
  for (std::size_t i = 0; i < n && real_only; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).imag() != 0.0) {
        real_only = false;
        break;
      }

  if (real_only) {
    Mat<double> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).real();
    return jacobi_sym_eig(std::move(a), false).values;
  }

  // Embed as [[Re, -Im], [Im, Re]]; every eigenvalue shows up twice.
  Mat<double> a(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double re = m(i, j).real(), im = m(i, j).imag();
      a(i, j) = re;
      a(n + i, n + j) = re;
      a(i, n + j) = -im;
      a(n + i, j) = im;
    }
  std::vector<double> doubled = jacobi_sym_eig(std::move(a), false).values;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

// ---- exact PSD --------------------------------------------------------------

Mat<GQ> PsdWitness::reconstruct() const {
  const std::size_t n = perm.size();
  Mat<GQ> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GQ s;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(diag[k]) == 0) continue;
        s += unit_lower(i, k) * GQ(diag[k]) * conj_val(unit_lower(j, k));
      }
      m(perm[i], perm[j]) = s;
    }
  return m;
}

namespace {

// Lift a violating vector of the working matrix back through the accumulated
// unit-lower transform and permutation: solve L^dagger w = w_in, then undo P.
std::vector<GQ> lift_violation(const Mat<GQ>& lower, const std::vector<std::size_t>& perm,
                               std::vector<GQ> w) {
  const std::size_t n = w.size();
  for (std::size_t ii = n; ii-- > 0;) {
    GQ s = w[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= conj_val(lower(j, ii)) * w[j];
    w[ii] = s;  // diagonal of L is 1
  }
  std::vector<GQ> v(n);
  for (std::size_t i = 0; i < n; ++i) v[perm[i]] = w[i];
  return v;
}

}  // namespace

PsdWitness rational_psd_check(const QHerm& m) {
  const std::size_t n = m.dim();
  Mat<GQ> s = m.mat();
  Mat<GQ> lower = Mat<GQ>::identity(n);
  std::vector<mpq_class> diag(n, mpq_class(0));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  PsdWitness out;

  auto fail_with = [&](std::vector<GQ> w) {
    std::vector<GQ> v = lift_violation(lower, perm, std::move(w));
    GQ val;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) val += conj_val(v[i]) * m(i, j) * v[j];
    out.psd = false;
    out.violating_vector = std::move(v);
    out.violation_value = val.re;
    return out;
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Largest-|.| diagonal pivot, compared exactly.
    std::size_t piv = k;
    mpq_class best = abs(s(k, k).re);
    for (std::size_t j = k + 1; j < n; ++j) {
      mpq_class cand = abs(s(j, j).re);
      if (cand > best) {
        best = cand;
        piv = j;
      }
    }

    if (sgn(best) == 0) {
      // Every remaining diagonal entry is zero. Any remaining off-diagonal
      // entry gives an indefinite 2x2 minor [[0, c],[conj(c), 0]].
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!is_zero(s(i, j))) {
            std::vector<GQ> w(n);
            w[i] = GQ(1);
            w[j] = -conj_val(s(i, j));  // value = -2 |s_ij|^2
            return fail_with(std::move(w));
          }
      break;  // trailing block identically zero: PSD with reduced rank
    }

    if (sgn(s(piv, piv).re) < 0) {
      std::vector<GQ> w(n);
      w[piv] = GQ(1);
      return fail_with(std::move(w));
    }

    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(s(k, j), s(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(s(i, k), s(i, piv));
      for (std::size_t j = 0; j < k; ++j) std::swap(lower(k, j), lower(piv, j));
      std::swap(perm[k], perm[piv]);
    }

    const GQ d = s(k, k);
    diag[k] = d.re;
    for (std::size_t i = k + 1; i < n; ++i) lower(i, k) = s(i, k) / d;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(s(i, k))) continue;
      for (std::size_t j = k + 1; j < n; ++j)
        s(i, j) -= lower(i, k) * conj_val(s(j, k));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      s(i, k) = GQ(0);
      s(k, i) = GQ(0);
    }
  }

  out.psd = true;
  out.unit_lower = std::move(lower);
  out.diag = std::move(diag);
  out.perm = std::move(perm);
  return out;
}

// ---- exact linear solve -----------------------------------------------------

LinearSolveResult solve_linear_exact(const Mat<GQ>& a, const std::vector<GQ>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (!b.empty() && b.size() != rows)
    throw std::invalid_argument("solve_linear_exact: dimension mismatch");

  Mat<GQ> w(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) w(i, j) = a(i, j);
    w(i, cols) = b.empty() ? GQ(0) : b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    mpq_class best = abs_sq(w(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpq_class cand = abs_sq(w(i, c));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (sgn(best) == 0) continue;
    if (piv != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(w(r, j), w(piv, j));
    GQ inv = GQ(1) / w(r, c);
    for (std::size_t j = c; j <= cols; ++j) w(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(w(i, c))) continue;
      GQ f = w(i, c);
      for (std::size_t j = c; j <= cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolveResult res;
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(w(i, cols))) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  res.particular.assign(cols, GQ(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) res.particular[pivot_col[i]] = w(i, cols);

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<GQ> k(cols, GQ(0));
    k[c] = GQ(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) k[pivot_col[i]] = -w(i, c);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

}  // namespace sepsos

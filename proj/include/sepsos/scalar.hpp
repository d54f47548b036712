#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace sepsos {

using Cplx = std::complex<double>;

// Gaussian rational a + b*i with arbitrary-precision rational parts.
// Closed under +, -, *, / (division by nonzero), which is everything the
// exact regime needs.
struct GaussianRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class r) : re(std::move(r)) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  mpq_class norm_sq() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

using GQ = GaussianRational;

// ---- uniform scalar interface over the two regimes -------------------------
//
// Floating regime: Cplx (std::complex<double>), real type double.
// Exact regime:    GQ, real type mpq_class.

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Cplx> {
  static constexpr bool exact = false;
  using Real = double;
};

template <>
struct ScalarTraits<GQ> {
  static constexpr bool exact = true;
  using Real = mpq_class;
};

// Real scalars participate too (Mat<double> carries the SDP solver's
// symmetric matrices; Mat<mpq_class> would be a real exact matrix).
template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  using Real = double;
};

template <>
struct ScalarTraits<mpq_class> {
  static constexpr bool exact = true;
  using Real = mpq_class;
};

inline double conj_val(double x) { return x; }
inline mpq_class conj_val(const mpq_class& x) { return x; }
inline double abs_sq(double x) { return x * x; }
inline mpq_class abs_sq(const mpq_class& x) { return x * x; }
inline double real_part(double x) { return x; }
inline const mpq_class& real_part(const mpq_class& x) { return x; }
inline double imag_part(double) { return 0.0; }
inline mpq_class imag_part(const mpq_class&) { return mpq_class(0); }

inline Cplx conj_val(const Cplx& z) { return std::conj(z); }
inline GQ conj_val(const GQ& z) { return z.conj(); }
inline double real_part(const Cplx& z) { return z.real(); }
inline const mpq_class& real_part(const GQ& z) { return z.re; }
inline double imag_part(const Cplx& z) { return z.imag(); }
inline const mpq_class& imag_part(const GQ& z) { return z.im; }
inline double abs_sq(const Cplx& z) { return std::norm(z); }
inline mpq_class abs_sq(const GQ& z) { return z.norm_sq(); }
inline bool is_zero(const Cplx& z) { return z == Cplx{0.0, 0.0}; }
inline bool is_zero(const GQ& z) { return z.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

inline Cplx to_cplx(const Cplx& z) { return z; }
inline Cplx to_cplx(const GQ& z) { return {z.re.get_d(), z.im.get_d()}; }
inline double to_double(double x) { return x; }
inline double to_double(const mpq_class& x) { return x.get_d(); }

template <class S>
S scalar_from_parts(typename ScalarTraits<S>::Real re, typename ScalarTraits<S>::Real im);
template <>
inline Cplx scalar_from_parts<Cplx>(double re, double im) { return {re, im}; }
template <>
inline GQ scalar_from_parts<GQ>(mpq_class re, mpq_class im) { return {std::move(re), std::move(im)}; }

// ---- string forms -----------------------------------------------------------
//
// Exact scalars travel as "p/q" (or plain integer) strings; floating scalars
// as round-trippable decimals. Decimal input is also accepted in the exact
// regime and converted without loss.

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

std::string double_to_string(double x);
double double_from_string(const std::string& s);

// Continued-fraction rounding: nearest rational to x with denominator at most
// den_bound.
mpq_class rationalize(double x, unsigned long den_bound);

}  // namespace sepsos

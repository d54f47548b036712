#include "sepsos/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace sepsos {

GQ operator/(const GQ& a, const GQ& b) {
  if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  mpq_class n = b.norm_sq();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational string: " + s);
    q.canonicalize();
    return q;
  }
  // Plain integer or terminating decimal; both convert exactly.
  std::string digits;
  digits.reserve(s.size());
  long frac_digits = -1;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') digits.push_back(s[i++]);
  bool any = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (frac_digits >= 0) throw std::invalid_argument("bad rational string: " + s);
      frac_digits = 0;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i]);
      if (frac_digits >= 0) ++frac_digits;
      any = true;
    } else {
      throw std::invalid_argument("bad rational string: " + s);
    }
  }
  if (!any) throw std::invalid_argument("bad rational string: " + s);
  mpq_class q{mpz_class(digits)};
  if (frac_digits > 0) {
    mpz_class den = 1;
    for (long k = 0; k < frac_digits; ++k) den *= 10;
    q /= mpq_class(den);
  }
  q.canonicalize();
  return q;
}

std::string double_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double double_from_string(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || (end && *end != '\0')) {
    // Allow "p/q" in floating inputs too.
    return rational_from_string(s).get_d();
  }
  return v;
}

mpq_class rationalize(double x, unsigned long den_bound) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
  bool neg = x < 0;
  double v = std::fabs(x);
  // Continued-fraction convergents p/q until the denominator bound.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int step = 0; step < 64; ++step) {
    double fa = std::floor(frac);
    if (fa > 9e18) break;
    mpz_class a(static_cast<unsigned long>(fa));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fa;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  mpq_class r(p1, q1 == 0 ? mpz_class(1) : q1);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

}  // namespace sepsos

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepsos/scalar.hpp"

namespace sepsos {

// ---- exponents ---------------------------------------------------------------

// Mixed monomial z^u zbar^v; u holds holomorphic exponents, v antiholomorphic.
struct ExponentPair {
  std::vector<std::uint32_t> u, v;

  std::size_t nvars() const { return u.size(); }
  ExponentPair conjugated() const { return {v, u}; }
  bool self_conjugate() const { return u == v; }
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : u) d += e;
    for (auto e : v) d += e;
    return d;
  }
  // Product of monomials (exponentwise sum).
  ExponentPair operator*(const ExponentPair& o) const {
    ExponentPair r = *this;
    for (std::size_t i = 0; i < u.size(); ++i) {
      r.u[i] += o.u[i];
      r.v[i] += o.v[i];
    }
    return r;
  }
  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Canonical term order: graded lexicographic on the concatenation (u, v).
struct GrlexLess {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
};

std::string monomial_to_string(const ExponentPair& e,
                               const std::vector<std::string>& var_names = {});

// ---- support sets ------------------------------------------------------------

struct SupportSet {
  std::size_t nvars = 0;
  std::set<ExponentPair, GrlexLess> pairs;

  bool contains(const ExponentPair& e) const { return pairs.count(e) > 0; }
  bool swap_closed() const {
    for (const auto& e : pairs)
      if (!contains(e.conjugated())) return false;
    return true;
  }
};

bool is_downward_closed(const SupportSet& a);
SupportSet downward_closure(const SupportSet& a);

// ---- polynomials -------------------------------------------------------------

template <class S>
S scalar_pow(const S& base, std::uint32_t e) {
  S r(1);
  for (std::uint32_t k = 0; k < e; ++k) r *= base;
  return r;
}

template <class S>
S scalar_i();
template <>
inline Cplx scalar_i<Cplx>() { return {0.0, 1.0}; }
template <>
inline GQ scalar_i<GQ>() { return {mpq_class(0), mpq_class(1)}; }

// Sparse Hermitian polynomial: map from exponent pairs to coefficients, with
// the symmetry coeff(u,v) == conj(coeff(v,u)). Both members of a conjugate
// pair are stored explicitly; operations preserve the symmetry and
// check_hermitian() rejects asymmetric input instead of completing it.
// The regime (exact or floating) is the scalar type; mixing is a compile
// error by construction.
template <class S>
class HermPoly {
 public:
  using TermMap = std::map<ExponentPair, S, GrlexLess>;

  HermPoly() = default;
  explicit HermPoly(std::size_t nvars, std::vector<std::vector<std::size_t>> blocks = {})
      : nvars_(nvars), blocks_(std::move(blocks)) {
    for (const auto& blk : blocks_)
      for (std::size_t i : blk)
        if (i >= nvars_) throw std::invalid_argument("HermPoly: block index out of range");
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  void set_blocks(std::vector<std::vector<std::size_t>> blocks) { blocks_ = std::move(blocks); }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  void add_term(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v, S c) {
    add_term(ExponentPair{std::move(u), std::move(v)}, std::move(c));
  }
  void add_term(ExponentPair e, S c) {
    if (e.u.size() != nvars_ || e.v.size() != nvars_)
      throw std::invalid_argument("HermPoly: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!is_zero(c)) terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  // Adds c * z^u zbar^v plus its conjugate term; diagonal (u == v) terms are
  // added once and must have real coefficients.
  void add_hermitian_term(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v, S c) {
    ExponentPair e{std::move(u), std::move(v)};
    if (e.self_conjugate()) {
      if (!is_zero(imag_part(c)))
        throw std::invalid_argument("HermPoly: diagonal term needs a real coefficient");
      add_term(e, std::move(c));
    } else {
      ExponentPair ec = e.conjugated();
      add_term(std::move(e), c);
      add_term(std::move(ec), conj_val(c));
    }
  }

  S coeff(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  bool is_hermitian_symmetric() const {
    typename ScalarTraits<S>::Real scale{};
    if constexpr (!ScalarTraits<S>::exact) {
      for (const auto& [e, c] : terms_) scale = std::max(scale, std::abs(c));
    }
    for (const auto& [e, c] : terms_) {
      S mirror = coeff(e.conjugated());
      if constexpr (ScalarTraits<S>::exact) {
        if (mirror != conj_val(c)) return false;
      } else {
        if (std::abs(mirror - conj_val(c)) > 1e-12 * std::max(1.0, scale)) return false;
      }
    }
    return true;
  }
  void check_hermitian() const {
    if (!is_hermitian_symmetric())
      throw std::invalid_argument("HermPoly: coefficients are not Hermitian-symmetric");
  }

  HermPoly& operator+=(const HermPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HermPoly& operator-=(const HermPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  HermPoly& operator*=(const S& c) {
    if (is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, w] : terms_) w *= c;
    return *this;
  }
  friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
  friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
  friend HermPoly operator-(HermPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend HermPoly operator*(HermPoly a, const S& c) { return a *= c; }

  friend HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    a.check_compatible(b);
    HermPoly r(a.nvars_, a.blocks_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea * eb, ca * cb);
    return r;
  }

  friend bool operator==(const HermPoly& a, const HermPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const HermPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("HermPoly: variable count mismatch");
  }

  std::size_t nvars_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  TermMap terms_;
};

using CPoly = HermPoly<Cplx>;
using QPoly = HermPoly<GQ>;

// Real polynomial (plain exponent vectors); realification target and the
// carrier for real sum-of-squares checks.
struct GrlexVecLess {
  bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

template <class R>
struct RealPoly {
  std::size_t nvars = 0;
  std::map<std::vector<std::uint32_t>, R, GrlexVecLess> terms;

  void add_term(std::vector<std::uint32_t> e, R c) {
    if (e.size() != nvars) throw std::invalid_argument("RealPoly: exponent length mismatch");
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!is_zero(c)) terms.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  R coeff(const std::vector<std::uint32_t>& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? R(0) : it->second;
  }
};

// ---- operations ----------------------------------------------------------------

template <class S>
S eval_monomial(const ExponentPair& e, const std::vector<S>& z) {
  S r(1);
  for (std::size_t i = 0; i < e.u.size(); ++i) {
    if (e.u[i]) r *= scalar_pow(z[i], e.u[i]);
    if (e.v[i]) r *= scalar_pow(conj_val(z[i]), e.v[i]);
  }
  return r;
}

// Value of p at z. Real by Hermitian symmetry; the imaginary residue is
// checked (exactly zero in the exact regime, <= 1e-10 * sum of term
// magnitudes in the floating regime) and then discarded.
template <class S>
typename ScalarTraits<S>::Real evaluate(const HermPoly<S>& p, const std::vector<S>& z) {
  if (z.size() != p.nvars()) throw std::invalid_argument("evaluate: dimension mismatch");
  S sum{};
  typename ScalarTraits<S>::Real magnitude{};
  for (const auto& [e, c] : p.terms()) {
    S term = c * eval_monomial(e, z);
    sum += term;
    if constexpr (!ScalarTraits<S>::exact) magnitude += std::abs(term);
  }
  if constexpr (ScalarTraits<S>::exact) {
    if (!is_zero(imag_part(sum)))
      throw std::domain_error("evaluate: nonzero imaginary residue (broken Hermitian symmetry)");
    return real_part(sum);
  } else {
    if (std::abs(sum.imag()) > 1e-10 * std::max(1.0, magnitude))
      throw std::domain_error("evaluate: imaginary residue above tolerance");
    return sum.real();
  }
}

template <class S>
HermPoly<S> add(const HermPoly<S>& p, const HermPoly<S>& q) { return p + q; }
template <class S>
HermPoly<S> multiply(const HermPoly<S>& p, const HermPoly<S>& q) { return p * q; }

// g^2 for Hermitian g (a real-valued square, the building block of
// sum-of-squares decompositions).
template <class S>
HermPoly<S> conjugate_square(const HermPoly<S>& g) {
  g.check_hermitian();
  return g * g;
}

// P(a, b) = p(a + i b) over 2n real variables (a_1..a_n, b_1..b_n).
// Imaginary parts of the expansion must cancel: exactly in the exact regime,
// within 1e-10 of the coefficient scale in the floating regime.
template <class S>
RealPoly<typename ScalarTraits<S>::Real> realify(const HermPoly<S>& p) {
  using R = typename ScalarTraits<S>::Real;
  const std::size_t n = p.nvars();
  std::map<std::vector<std::uint32_t>, S, GrlexVecLess> acc;

  for (const auto& [e, c] : p.terms()) {
    std::map<std::vector<std::uint32_t>, S, GrlexVecLess> cur;
    cur.emplace(std::vector<std::uint32_t>(2 * n, 0), c);
    auto mul_linear = [&](std::size_t var, const S& bcoef) {
      // multiply the running expansion by (a_var + bcoef * b_var)
      std::map<std::vector<std::uint32_t>, S, GrlexVecLess> next;
      for (const auto& [exp, w] : cur) {
        auto ea = exp;
        ++ea[var];
        auto ita = next.find(ea);
        if (ita == next.end()) next.emplace(std::move(ea), w);
        else ita->second += w;
        auto eb = exp;
        ++eb[n + var];
        S wb = w * bcoef;
        auto itb = next.find(eb);
        if (itb == next.end()) next.emplace(std::move(eb), std::move(wb));
        else itb->second += wb;
      }
      cur = std::move(next);
    };
    for (std::size_t j = 0; j < n; ++j) {
      for (std::uint32_t k = 0; k < e.u[j]; ++k) mul_linear(j, scalar_i<S>());
      for (std::uint32_t k = 0; k < e.v[j]; ++k) mul_linear(j, -scalar_i<S>());
    }
    for (auto& [exp, w] : cur) {
      auto it = acc.find(exp);
      if (it == acc.end()) acc.emplace(exp, w);
      else it->second += w;
    }
  }

  typename ScalarTraits<S>::Real scale{};
  if constexpr (!ScalarTraits<S>::exact) {
    for (const auto& [exp, w] : acc) scale = std::max(scale, std::abs(w));
  }
  RealPoly<R> out;
  out.nvars = 2 * n;
  for (const auto& [exp, w] : acc) {
    if constexpr (ScalarTraits<S>::exact) {
      if (!is_zero(imag_part(w)))
        throw std::domain_error("realify: nonzero imaginary coefficient (broken symmetry)");
      out.add_term(exp, real_part(w));
    } else {
      if (std::abs(w.imag()) > 1e-10 * std::max(1.0, scale))
        throw std::domain_error("realify: imaginary coefficient above tolerance");
      if (w.real() != 0.0) out.add_term(exp, w.real());
    }
  }
  return out;
}

template <class R>
R evaluate_real(const RealPoly<R>& p, const std::vector<R>& x) {
  if (x.size() != p.nvars) throw std::invalid_argument("evaluate_real: dimension mismatch");
  R sum{};
  for (const auto& [e, c] : p.terms) {
    R t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

// Substitute constants for chosen variables (conjugates feed the
// antiholomorphic exponents) and re-collect over the remaining variables.
// The ambient variable count shrinks; blocks are remapped accordingly.
template <class S>
HermPoly<S> dehomogenize(const HermPoly<S>& p, const std::map<std::size_t, S>& assignments) {
  for (const auto& [idx, val] : assignments) {
    (void)val;
    if (idx >= p.nvars()) throw std::invalid_argument("dehomogenize: unknown variable");
  }
  std::vector<std::size_t> remap(p.nvars(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (!assignments.count(i)) remap[i] = next++;

  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& blk : p.blocks()) {
    std::vector<std::size_t> nb;
    for (std::size_t i : blk)
      if (remap[i] != SIZE_MAX) nb.push_back(remap[i]);
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }

  HermPoly<S> out(next, std::move(blocks));
  for (const auto& [e, c] : p.terms()) {
    S factor = c;
    std::vector<std::uint32_t> u(next, 0), v(next, 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      auto it = assignments.find(i);
      if (it != assignments.end()) {
        if (e.u[i]) factor *= scalar_pow(it->second, e.u[i]);
        if (e.v[i]) factor *= scalar_pow(conj_val(it->second), e.v[i]);
      } else {
        u[remap[i]] = e.u[i];
        v[remap[i]] = e.v[i];
      }
    }
    out.add_term(std::move(u), std::move(v), std::move(factor));
  }
  return out;
}

// Insertion of a homogenizing variable for one block.
struct Homogenizer {
  std::size_t insert_pos = 0;  // index of the new variable in the enlarged order
  std::size_t block = 0;       // which block it homogenizes
  // Target block bidegree (holomorphic, antiholomorphic); defaults to the
  // per-block maximum over terms.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> target;
};

// Multiply each term by powers of the inserted variables (and conjugates) so
// every term reaches a uniform per-block bidegree. Inverse of dehomogenize at
// the inserted variables = 1.
template <class S>
HermPoly<S> homogenize(const HermPoly<S>& p, std::vector<Homogenizer> homs) {
  const std::size_t n = p.nvars();
  const std::size_t nn = n + homs.size();
  if (p.blocks().empty()) throw std::invalid_argument("homogenize: polynomial has no blocks");

  std::sort(homs.begin(), homs.end(),
            [](const Homogenizer& a, const Homogenizer& b) { return a.insert_pos < b.insert_pos; });
  for (const auto& h : homs) {
    if (h.insert_pos >= nn) throw std::invalid_argument("homogenize: insert position out of range");
    if (h.block >= p.blocks().size()) throw std::invalid_argument("homogenize: block out of range");
  }

  // old index -> new index
  std::vector<std::size_t> remap(n);
  {
    std::vector<bool> taken(nn, false);
    for (const auto& h : homs) {
      if (taken[h.insert_pos]) throw std::invalid_argument("homogenize: duplicate insert position");
      taken[h.insert_pos] = true;
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (taken[next]) ++next;
      remap[i] = next++;
    }
  }

  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& blk : p.blocks()) {
    std::vector<std::size_t> nb;
    for (std::size_t i : blk) nb.push_back(remap[i]);
    blocks.push_back(std::move(nb));
  }
  for (const auto& h : homs) blocks[h.block].push_back(h.insert_pos);

  // per-term block bidegrees, and per-block targets
  auto block_bidegree = [&](const ExponentPair& e, std::size_t blk) {
    std::uint32_t du = 0, dv = 0;
    for (std::size_t i : p.blocks()[blk]) {
      du += e.u[i];
      dv += e.v[i];
    }
    return std::pair<std::uint32_t, std::uint32_t>{du, dv};
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> target(homs.size(), {0, 0});
  for (std::size_t h = 0; h < homs.size(); ++h) {
    if (homs[h].target) {
      target[h] = *homs[h].target;
    } else {
      for (const auto& [e, c] : p.terms()) {
        auto [du, dv] = block_bidegree(e, homs[h].block);
        target[h].first = std::max(target[h].first, du);
        target[h].second = std::max(target[h].second, dv);
      }
    }
  }

  HermPoly<S> out(nn, std::move(blocks));
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::uint32_t> u(nn, 0), v(nn, 0);
    for (std::size_t i = 0; i < n; ++i) {
      u[remap[i]] = e.u[i];
      v[remap[i]] = e.v[i];
    }
    for (std::size_t h = 0; h < homs.size(); ++h) {
      auto [du, dv] = block_bidegree(e, homs[h].block);
      if (du > target[h].first || dv > target[h].second)
        throw std::invalid_argument("homogenize: target degree too small");
      u[homs[h].insert_pos] = target[h].first - du;
      v[homs[h].insert_pos] = target[h].second - dv;
    }
    out.add_term(std::move(u), std::move(v), c);
  }
  return out;
}

template <class S>
SupportSet support(const HermPoly<S>& p) {
  SupportSet s;
  s.nvars = p.nvars();
  for (const auto& [e, c] : p.terms()) s.pairs.insert(e);
  return s;
}

// Homogenize a support set the same way homogenize() treats terms; also
// returns, for each element of `a` in canonical order, the position of its
// image in the canonical order of the result. This is the correspondence that
// realizes the monomial map of the enlarged set as a homogenization of the
// smaller one.
std::pair<SupportSet, std::vector<std::size_t>> homogenize_support(
    const SupportSet& a, const std::vector<std::vector<std::size_t>>& blocks,
    const std::vector<Homogenizer>& homs);

// Componentwise monomial evaluation in canonical term order.
template <class S>
std::vector<S> monomial_map(const SupportSet& a, const std::vector<S>& z) {
  if (z.size() != a.nvars) throw std::invalid_argument("monomial_map: dimension mismatch");
  std::vector<S> out;
  out.reserve(a.pairs.size());
  for (const auto& e : a.pairs) out.push_back(eval_monomial(e, z));
  return out;
}

// Regime conversion.
CPoly to_floating(const QPoly& p);

}  // namespace sepsos

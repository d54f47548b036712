#include "sepsos/poly.hpp"

#include <algorithm>
#include <deque>

#include "sepsos/matrix.hpp"

namespace sepsos {

std::string monomial_to_string(const ExponentPair& e, const std::vector<std::string>& var_names) {
  auto name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "z" + std::to_string(i + 1);
  };
  std::string s;
  auto emit = [&](const std::string& base, std::uint32_t exp) {
    if (exp == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (exp > 1) s += "^" + std::to_string(exp);
  };
  for (std::size_t i = 0; i < e.u.size(); ++i) emit(name(i), e.u[i]);
  for (std::size_t i = 0; i < e.v.size(); ++i) emit("~" + name(i), e.v[i]);
  return s.empty() ? "1" : s;
}

bool is_downward_closed(const SupportSet& a) {
  // Closure under componentwise domination is equivalent to closure under
  // single decrements.
  for (const auto& e : a.pairs) {
    for (std::size_t i = 0; i < e.u.size(); ++i) {
      if (e.u[i] > 0) {
        ExponentPair d = e;
        --d.u[i];
        if (!a.contains(d)) return false;
      }
      if (e.v[i] > 0) {
        ExponentPair d = e;
        --d.v[i];
        if (!a.contains(d)) return false;
      }
    }
  }
  return true;
}

SupportSet downward_closure(const SupportSet& a) {
  SupportSet out;
  out.nvars = a.nvars;
  std::deque<ExponentPair> queue(a.pairs.begin(), a.pairs.end());
  out.pairs = a.pairs;
  while (!queue.empty()) {
    ExponentPair e = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < e.u.size(); ++i) {
      if (e.u[i] > 0) {
        ExponentPair d = e;
        --d.u[i];
        if (out.pairs.insert(d).second) queue.push_back(std::move(d));
      }
      if (e.v[i] > 0) {
        ExponentPair d = e;
        --d.v[i];
        if (out.pairs.insert(d).second) queue.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::pair<SupportSet, std::vector<std::size_t>> homogenize_support(
    const SupportSet& a, const std::vector<std::vector<std::size_t>>& blocks,
    const std::vector<Homogenizer>& homs_in) {
  const std::size_t n = a.nvars;
  std::vector<Homogenizer> homs = homs_in;
  std::sort(homs.begin(), homs.end(),
            [](const Homogenizer& x, const Homogenizer& y) { return x.insert_pos < y.insert_pos; });
  const std::size_t nn = n + homs.size();

  std::vector<std::size_t> remap(n);
  {
    std::vector<bool> taken(nn, false);
    for (const auto& h : homs) taken[h.insert_pos] = true;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (taken[next]) ++next;
      remap[i] = next++;
    }
  }

  auto block_bidegree = [&](const ExponentPair& e, std::size_t blk) {
    std::uint32_t du = 0, dv = 0;
    for (std::size_t i : blocks[blk]) {
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
      for (const auto& e : a.pairs) {
        auto [du, dv] = block_bidegree(e, homs[h].block);
        target[h].first = std::max(target[h].first, du);
        target[h].second = std::max(target[h].second, dv);
      }
    }
  }

  SupportSet big;
  big.nvars = nn;
  std::vector<ExponentPair> images;
  images.reserve(a.pairs.size());
  for (const auto& e : a.pairs) {
    ExponentPair img;
    img.u.assign(nn, 0);
    img.v.assign(nn, 0);
    for (std::size_t i = 0; i < n; ++i) {
      img.u[remap[i]] = e.u[i];
      img.v[remap[i]] = e.v[i];
    }
    for (std::size_t h = 0; h < homs.size(); ++h) {
      auto [du, dv] = block_bidegree(e, homs[h].block);
      if (du > target[h].first || dv > target[h].second)
        throw std::invalid_argument("homogenize_support: target degree too small");
      img.u[homs[h].insert_pos] = target[h].first - du;
      img.v[homs[h].insert_pos] = target[h].second - dv;
    }
    big.pairs.insert(img);
    images.push_back(std::move(img));
  }

  std::vector<std::size_t> positions;
  positions.reserve(images.size());
  for (const auto& img : images) {
    std::size_t pos = 0;
    for (const auto& e : big.pairs) {
      if (e == img) break;
      ++pos;
    }
    positions.push_back(pos);
  }
  return {std::move(big), std::move(positions)};
}

CPoly to_floating(const QPoly& p) {
  CPoly out(p.nvars(), p.blocks());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_cplx(c));
  return out;
}

}  // namespace sepsos

#pragma once

#include "confal/rational.hpp"
#include "confal/vars.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace confal {

// Monomial: sorted (var id, exponent) pairs, exponents > 0.
using Mono = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline std::uint64_t mono_degree(const Mono& m) {
  std::uint64_t d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

inline std::uint32_t mono_exp(const Mono& m, std::uint32_t var) {
  for (auto& [v, e] : m)
    if (v == var) return e;
  return 0;
}

// Graded lexicographic order: total degree first; ties by exponents on the
// most significant (smallest-id) variable.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    std::uint64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first) {
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
      } else if (a[i].first < b[j].first) {
        return false;  // a has positive exponent on a more significant var
      } else {
        return true;
      }
    }
    return i == a.size() && j != b.size();
  }
};

// Sparse polynomial over coefficient ring C. Canonical: no zero coefficients
// are stored, so equality is map equality and zero-testing is O(1).
template <class C>
class SparsePoly {
 public:
  using Map = std::map<Mono, C, GrlexLess>;

  SparsePoly() = default;

  static SparsePoly zero() { return SparsePoly(); }

  static SparsePoly constant(C c) {
    SparsePoly p;
    p.add_term(Mono{}, std::move(c));
    return p;
  }

  static SparsePoly variable(std::uint32_t var, C one, std::uint32_t exp = 1) {
    SparsePoly p;
    if (exp == 0) return constant(std::move(one));
    p.add_term(Mono{{var, exp}}, std::move(one));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const Map& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  void add_term(const Mono& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }

  SparsePoly operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }

  SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

  SparsePoly operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (auto& [ma, ca] : t_)
      for (auto& [mb, cb] : o.t_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }

  SparsePoly scaled(const C& c) const {
    SparsePoly r;
    if (coeff_is_zero(c)) return r;
    for (auto& [m, k] : t_) r.add_term(m, k * c);
    return r;
  }

  SparsePoly mul_term(const Mono& m, const C& c) const {
    SparsePoly r;
    if (coeff_is_zero(c)) return r;
    for (auto& [mm, k] : t_) r.add_term(mono_mul(mm, m), k * c);
    return r;
  }

  SparsePoly pow(std::uint32_t n) const {
    SparsePoly r, base = *this;
    r.add_term(Mono{}, one_like());
    while (n) {
      if (n & 1) r = r * base;
      base = n > 1 ? base * base : base;
      n >>= 1;
    }
    return r;
  }

  // Coefficient of var^n, with var stripped (plain power, no factorial).
  SparsePoly coefficient_of(std::uint32_t var, std::uint32_t n) const {
    SparsePoly r;
    for (auto& [m, c] : t_) {
      if (mono_exp(m, var) != n) continue;
      Mono stripped;
      for (auto& [v, e] : m)
        if (v != var) stripped.emplace_back(v, e);
      r.add_term(stripped, c);
    }
    return r;
  }

  std::uint32_t degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : t_) d = std::max(d, mono_exp(m, var));
    return d;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
    return d;
  }

  void collect_vars(std::set<std::uint32_t>& out) const {
    for (auto& [m, c] : t_)
      for (auto& [v, e] : m) out.insert(v);
  }

  bool contains_var(std::uint32_t var) const {
    for (auto& [m, c] : t_)
      if (mono_exp(m, var) != 0) return true;
    return false;
  }

  // Simultaneous substitution of whole polynomials for variables. Monomial-wise
  // expansion, so substituted values never get re-substituted.
  SparsePoly substitute_many(const std::map<std::uint32_t, SparsePoly>& subs) const {
    std::map<std::uint32_t, std::vector<SparsePoly>> powers;  // var -> [q^1, q^2, ...]
    auto power = [&](std::uint32_t var, std::uint32_t e) -> const SparsePoly& {
      auto& vec = powers[var];
      while (vec.size() < e) {
        if (vec.empty())
          vec.push_back(subs.at(var));
        else
          vec.push_back(vec.back() * subs.at(var));
      }
      return vec[e - 1];
    };
    SparsePoly r;
    for (auto& [m, c] : t_) {
      Mono rest;
      SparsePoly acc = constant(c);
      for (auto& [v, e] : m) {
        if (subs.count(v))
          acc = acc * power(v, e);
        else
          rest.emplace_back(v, e);
      }
      r = r + acc.mul_term(rest, one_like());
    }
    return r;
  }

  // Rename variables (e.g. merging parameter contexts). Mapping must be
  // injective on the variables present.
  SparsePoly rename_vars(const std::map<std::uint32_t, std::uint32_t>& remap) const {
    if (remap.empty()) return *this;
    SparsePoly r;
    for (auto& [m, c] : t_) {
      Mono mm;
      for (auto& [v, e] : m) {
        auto it = remap.find(v);
        mm.emplace_back(it == remap.end() ? v : it->second, e);
      }
      std::sort(mm.begin(), mm.end());
      r.add_term(mm, c);
    }
    return r;
  }

  const std::pair<const Mono, C>& leading_term() const {
    if (t_.empty()) throw Error("leading term of zero polynomial");
    return *t_.rbegin();
  }

  bool operator==(const SparsePoly&) const = default;

 private:
  static C one_like() { return C(1); }
  Map t_;
};

using PPoly = SparsePoly<Rational>;  // polynomial in Param variables over Q

}  // namespace confal

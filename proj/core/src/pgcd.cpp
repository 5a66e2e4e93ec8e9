#include "confal/pgcd.hpp"

namespace confal {

namespace {

bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  std::size_t j = 0;
  for (auto& [v, e] : a) {
    while (j < b.size() && b[j].first < v) ++j;
    if (j == b.size() || b[j].first != v || b[j].second < e) return false;
  }
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {  // b / a, assumes divisibility
  Mono r;
  std::size_t j = 0;
  for (auto& [v, e] : b) {
    std::uint32_t sub = 0;
    for (auto& [va, ea] : a)
      if (va == v) sub = ea;
    if (e > sub) r.emplace_back(v, e - sub);
  }
  (void)j;
  return r;
}

// Univariate view in var: coefficient of var^k as a PPoly in the other vars.
PPoly coeff_in(const PPoly& p, std::uint32_t var, std::uint32_t k) {
  return p.coefficient_of(var, k);
}

PPoly times_var_pow(const PPoly& p, std::uint32_t var, std::uint32_t e) {
  if (e == 0) return p;
  return p.mul_term(Mono{{var, e}}, Rational(1));
}

// Pseudo-remainder of a by b with respect to var.
PPoly prem(PPoly a, const PPoly& b, std::uint32_t var) {
  std::uint32_t db = b.degree_in(var);
  PPoly lcb = coeff_in(b, var, db);
  while (!a.is_zero()) {
    std::uint32_t da = a.degree_in(var);
    if (da < db) break;
    PPoly lca = coeff_in(a, var, da);
    a = a * lcb - times_var_pow(lca, var, da - db) * b;
  }
  return a;
}

// Content of p as a univariate polynomial in var (gcd of its coefficients).
PPoly content_in(const PPoly& p, std::uint32_t var) {
  PPoly g;
  for (std::uint32_t k = 0; k <= p.degree_in(var); ++k) {
    PPoly c = coeff_in(p, var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : pp_gcd(g, c);
    if (!g.is_zero() && g.total_degree() == 0) break;
  }
  return pp_primitive(g);
}

}  // namespace

std::optional<PPoly> pp_divide_exact(const PPoly& a, const PPoly& b) {
  if (b.is_zero()) return std::nullopt;
  PPoly r = a, q;
  const auto& [lbm, lbc] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [lrm, lrc] = r.leading_term();
    if (!mono_divides(lbm, lrm)) return std::nullopt;
    Mono qm = mono_div(lrm, lbm);
    Rational qc = lrc / lbc;
    q.add_term(qm, qc);
    r = r - b.mul_term(qm, qc);
  }
  return q;
}

Rational pp_content(const PPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : p.terms()) {
    num_gcd = int_gcd(num_gcd, boost::multiprecision::numerator(c));
    den_lcm = int_lcm(den_lcm, boost::multiprecision::denominator(c));
  }
  Rational content(num_gcd, den_lcm);
  if (p.leading_term().second < 0) content = -content;
  return content;
}

PPoly pp_primitive(const PPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / pp_content(p));
}

PPoly pp_gcd(const PPoly& a, const PPoly& b) {
  if (a.is_zero()) return pp_primitive(b);
  if (b.is_zero()) return pp_primitive(a);
  PPoly A = pp_primitive(a), B = pp_primitive(b);
  if (A.total_degree() == 0 || B.total_degree() == 0) return PPoly::constant(Rational(1));

  std::set<std::uint32_t> vars;
  A.collect_vars(vars);
  B.collect_vars(vars);
  std::uint32_t v = *vars.begin();

  PPoly contA = content_in(A, v), contB = content_in(B, v);
  PPoly cont = pp_gcd(contA, contB);
  std::optional<PPoly> pa = pp_divide_exact(A, contA), pb = pp_divide_exact(B, contB);
  PPoly primA = pa ? *pa : A, primB = pb ? *pb : B;

  if (primA.degree_in(v) < primB.degree_in(v)) std::swap(primA, primB);
  while (!primB.is_zero()) {
    if (primB.degree_in(v) == 0) {
      // unit w.r.t. v after removing content, so the PRS bottoms out
      primA = PPoly::constant(Rational(1));
      break;
    }
    PPoly r = prem(primA, primB, v);
    primA = primB;
    if (r.is_zero()) {
      primB = PPoly();
    } else {
      PPoly c = content_in(r, v);
      auto d = pp_divide_exact(r, c);
      primB = pp_primitive(d ? *d : r);
    }
  }
  return pp_primitive(cont * pp_primitive(primA));
}

}  // namespace confal

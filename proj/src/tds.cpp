#include "liefold/tds.hpp"

#include <algorithm>

namespace liefold {

namespace {

const Rational kOne(1), kZero(0);

bool zero_vec(const Vec<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

Vec<Rational> scaled(Vec<Rational> v, const Rational& s) {
  for (auto& x : v) x *= s;
  return v;
}

Vec<Rational> axpy(Vec<Rational> y, const Rational& a, const Vec<Rational>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

Matrix<Rational> stack(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> m(a.rows() + b.rows(), a.cols(), kZero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Matrix<Rational> shifted(Matrix<Rational> m, const Rational& s) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= s;
  return m;
}

Matrix<Rational> columns(const std::vector<Vec<Rational>>& vs, std::size_t n) {
  Matrix<Rational> m(n, vs.size(), kZero);
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return m;
}

}  // namespace

Vec<Rational> principal_nilpotent(const LieRealization& g) {
  Vec<Rational> v(g.dim(), kZero);
  for (int i = 0; i < g.rank(); ++i) v[g.e_index(i)] = 1;
  return v;
}

Vec<Rational> folded_principal_nilpotent(const FoldingSpec& spec, const LieRealization& g,
                                         const Matrix<Rational>& sigma, FoldedSum mode) {
  Vec<Rational> y(g.dim(), kZero);
  for (int j = 0; j < spec.target_rank(); ++j) {
    Vec<Rational> yn(g.dim(), kZero);
    if (mode == FoldedSum::PowerSum) {
      Vec<Rational> x = g.basis_vector(g.e_index(spec.reps[j]), kOne);
      for (int i = 1; i <= spec.order; ++i) {
        x = sigma.apply(x);
        yn = axpy(yn, kOne, x);
      }
    } else {
      for (int k : spec.orbits[j]) yn[g.e_index(k)] += 1;
    }
    if (zero_vec(yn)) throw InvariantViolation("orbit contribution y_" + std::to_string(j + 1) + " vanishes");
    y = axpy(y, kOne, yn);
  }
  if (sigma.apply(y) != y) throw InvariantViolation("folded principal nilpotent is not sigma-fixed");
  for (int i = 0; i < g.rank(); ++i)
    if (sgn(y[g.e_index(i)]) <= 0)
      throw InvariantViolation("folded principal nilpotent misses simple root vector " + std::to_string(i + 1));
  return y;
}

int nilpotency_index(const LieRealization& g, const Vec<Rational>& v) {
  Matrix<Rational> a = g.ad(v), p = a;
  for (int k = 1; k <= g.dim() + 1; ++k) {
    if (p.is_zero_matrix()) return k;
    p = p * a;
  }
  throw InvalidInput("element is not nilpotent");
}

PrincipalCheck is_principal(const LieRealization& g, const Vec<Rational>& v) {
  nilpotency_index(g, v);
  PrincipalCheck out;
  out.centralizer_dim = g.dim() - static_cast<int>(rank(g.ad(v)));
  out.principal = out.centralizer_dim == g.rank();
  return out;
}

PrincipalCheck is_principal_in(const LieRealization& g, const SubalgebraEmbedding& k, int rank_k,
                               const Vec<Rational>& v) {
  nilpotency_index(g, v);
  Matrix<Rational> m = g.ad(v) * columns(k.basis, g.dim());
  PrincipalCheck out;
  out.centralizer_dim = k.dim() - static_cast<int>(rank(m));
  out.principal = out.centralizer_dim == rank_k;
  return out;
}

Sl2Triple complete_sl2(const LieRealization& g, const Vec<Rational>& x) {
  const int n = g.dim(), l = g.rank();
  for (int a = 0; a < n; ++a) {
    bool simple_e = false;
    for (int i = 0; i < l; ++i) simple_e = simple_e || a == g.e_index(i);
    if (simple_e ? is_zero(x[a]) : !is_zero(x[a]))
      throw InvalidInput("complete_sl2 expects sum a_i e_i with every a_i nonzero");
  }
  // h = sum c_i h_i with [h, e_j] = 2 e_j: C^T c = (2,...,2).
  Matrix<Rational> ct(l, l, kZero);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) ct(j, i) = static_cast<long>(g.datum().cartan()[i][j]);
  auto c = solve(ct, Vec<Rational>(l, Rational(2)), kOne);
  if (!c) throw InvariantViolation("Cartan matrix is singular");
  Sl2Triple t;
  t.x = x;
  t.h = Vec<Rational>(n, kZero);
  for (int i = 0; i < l; ++i) t.h[g.h_index(i)] = (*c)[i];

  // y from [x, y] = h and [h, y] = -2y.
  Matrix<Rational> sys = stack(g.ad(x), shifted(g.ad(t.h), Rational(-2)));
  Vec<Rational> rhs = t.h;
  rhs.resize(2 * n, kZero);
  auto y = solve(sys, rhs, kOne);
  if (!y) throw InvariantViolation("no y completes the triple: the element is not principal");
  t.y = *y;
  t.homogeneous_solutions = n - static_cast<int>(rank(sys));
  return t;
}

CheckRecord verify_triple(const LieRealization& g, const Sl2Triple& t) {
  CheckRecord r{"sl2_relations", "[h,x] = 2x, [h,y] = -2y, [x,y] = h", {{"type", g.datum().name()}}};
  bool ok = g.bracket(t.h, t.x) == scaled(t.x, Rational(2)) && g.bracket(t.h, t.y) == scaled(t.y, Rational(-2)) &&
            g.bracket(t.x, t.y) == t.h;
  std::vector<std::string> hs;
  for (int i = 0; i < g.rank(); ++i) hs.push_back(to_string(t.h[g.h_index(i)]));
  r.witness = {{"h", hs}, {"homogeneous_solutions", t.homogeneous_solutions}};
  r.verdict = verdict_of(ok && t.homogeneous_solutions == 0);
  return r;
}

IsotypicDecomposition decompose_adjoint(const LieRealization& g, const Sl2Triple& t) {
  const int n = g.dim();
  IsotypicDecomposition out;
  Matrix<Rational> ax = g.ad(t.x), ah = g.ad(t.h);
  nlohmann::json in{{"type", g.datum().name()}};
  bool strings_ok = true;
  int found = 0;
  for (int lambda = 0; found < n && lambda <= 2 * n; lambda += 2) {
    auto hw = kernel(stack(ax, shifted(ah, Rational(lambda))), kOne);
    if (hw.empty()) continue;
    if (hw.size() > 1) {
      out.multiple_highest_weights.emplace_back(lambda, static_cast<int>(hw.size()));
      // Gram-Schmidt for (u, v) -> -kappa(u, omega v).
      auto pair = [&g](const Vec<Rational>& u, const Vec<Rational>& v) -> Rational {
        return -g.killing_form(u, g.chevalley_involution(v));
      };
      std::vector<Vec<Rational>> ortho;
      for (const auto& v : hw) {
        Vec<Rational> w = v;
        for (const auto& u : ortho) w = axpy(w, -pair(v, u) / pair(u, u), u);
        ortho.push_back(w);
      }
      hw = ortho;
    }
    for (const auto& v : hw) {
      Sl2String s;
      s.m = lambda / 2;
      Vec<Rational> w = v;
      for (int k = 0; k <= 2 * s.m; ++k) {
        if (zero_vec(w) || ah.apply(w) != scaled(w, Rational(lambda - 2 * k))) strings_ok = false;
        s.vectors.push_back(w);
        w = g.bracket(t.y, w);
      }
      if (!zero_vec(w)) strings_ok = false;
      found += s.dim();
      out.components.push_back(std::move(s));
    }
  }
  for (const auto& c : out.components) out.dims.push_back(c.dim());

  {
    CheckRecord r{"sl2_strings", "each V_i is an irreducible sl2-module", in};
    r.verdict = verdict_of(strings_ok);
    out.checks.push_back(r);
  }
  {
    CheckRecord r{"direct_sum", "g = V_1 + ... + V_l", in};
    std::vector<Vec<Rational>> all;
    for (const auto& c : out.components)
      for (const auto& v : c.vectors) all.push_back(v);
    bool ok = static_cast<int>(all.size()) == n && static_cast<int>(rank(columns(all, n))) == n;
    r.witness = {{"components", out.components.size()}, {"rank", g.rank()}};
    r.verdict = verdict_of(ok && static_cast<int>(out.components.size()) == g.rank());
    out.checks.push_back(r);
  }
  {
    CheckRecord r{"dims_match_exponents", "n_i = 2 m_i + 1", in};
    std::vector<int> expected;
    for (int m : g.datum().exponents()) expected.push_back(2 * m + 1);
    r.witness = {{"dims", out.dims}, {"expected", expected}};
    nlohmann::json mult = nlohmann::json::array();
    for (auto [lam, d] : out.multiple_highest_weights) mult.push_back({{"eigenvalue", lam}, {"dim", d}});
    r.witness["multiple_highest_weights"] = mult;
    r.verdict = verdict_of(out.dims == expected);
    out.checks.push_back(r);
  }
  return out;
}

SubDecomposition decompose_in_subalgebra(const LieRealization& g, const Sl2Triple& t,
                                         const SubalgebraEmbedding& k, const IsotypicDecomposition& ambient) {
  const int n = g.dim();
  SubDecomposition out;
  Matrix<Rational> kb = columns(k.basis, n);
  Matrix<Rational> ax = g.ad(t.x) * kb, ah = g.ad(t.h) * kb;
  bool members = true;
  int found = 0;
  for (int lambda = 0; found < k.dim() && lambda <= 2 * n; lambda += 2) {
    Matrix<Rational> shift = kb;
    shift *= Rational(lambda);
    auto coords = kernel(stack(ax, ah - shift), kOne);
    if (coords.empty()) continue;
    std::vector<Vec<Rational>> amb;
    for (const auto& c : ambient.components)
      if (2 * c.m == lambda) amb.push_back(c.vectors[0]);
    for (const auto& c : coords) {
      Vec<Rational> w = kb.apply(c);
      out.dims.push_back(lambda + 1);
      found += lambda + 1;
      auto with = amb;
      with.push_back(w);
      members = members && !amb.empty() && rank(columns(with, n)) == rank(columns(amb, n));
    }
  }
  std::sort(out.dims.begin(), out.dims.end());
  CheckRecord r{"k_components_are_ambient_components", "V_1 + ... + V_{l_k} is a decomposition of k",
                {{"type", g.datum().name()}}};
  r.witness = {{"k_dims", out.dims}, {"k_dim", k.dim()}};
  r.verdict = verdict_of(members && found == k.dim());
  out.checks.push_back(r);
  return out;
}

}  // namespace liefold

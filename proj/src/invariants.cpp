#include "liefold/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace liefold {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
F zero_like(const F& proto) {
  return proto - proto;
}

template <class F>
F one_like(const F& proto) {
  return scalar_like<F>(1, proto);
}

template <class F>
bool is_diagonal(const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !is_zero(m(i, j))) return false;
  return true;
}

template <class F>
F trace(const Matrix<F>& m) {
  F s = zero_like(m(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

/// tr(a b) without forming the product.
template <class F>
F trace_of_product(const Matrix<F>& a, const Matrix<F>& b) {
  F s = zero_like(a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(b(j, i))) s += a(i, j) * b(j, i);
  return s;
}

template <class F>
F power(F x, int k) {
  F r = one_like(x);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

/// tr(x^k) for k >= 1, with a diagonal fast path.
template <class F>
F trace_power(const Matrix<F>& x, int k) {
  if (is_diagonal(x)) {
    F s = zero_like(x(0, 0));
    for (std::size_t i = 0; i < x.rows(); ++i) s += power(x(i, i), k);
    return s;
  }
  if (k == 1) return trace(x);
  Matrix<F> p = x;
  for (int i = 2; i < k; ++i) p = p * x;
  return trace_of_product(p, x);
}

/// tr(x^(k-1) y), diagonal fast path when both are diagonal.
template <class F>
F trace_power_times(const Matrix<F>& x, int k, const Matrix<F>& y) {
  if (is_diagonal(x) && is_diagonal(y)) {
    F s = zero_like(x(0, 0));
    for (std::size_t i = 0; i < x.rows(); ++i) s += power(x(i, i), k - 1) * y(i, i);
    return s;
  }
  Matrix<F> p = Matrix<F>::identity(x.rows(), one_like(x(0, 0)));
  for (int i = 1; i < k; ++i) p = p * x;
  return trace_of_product(p, y);
}

template <class F>
Vec<F> map_vector(const Matrix<Rational>& m, const Vec<F>& v) {
  const F zero = zero_like(v[0]);
  Vec<F> out(m.rows(), zero);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_zero(v[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) out[r] += from_rational(m(r, c), v[c]) * v[c];
  }
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int inversion_parity(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2;
}

/// Weights w_j with f'(0) = sum_j w_j f(j) for polynomials of degree <= k.
std::vector<Rational> derivative_weights(int k) {
  std::vector<Rational> w(k + 1);
  Rational h = 0;
  for (int m = 1; m <= k; ++m) h += Rational(1) / m;
  w[0] = -h;
  for (int j = 1; j <= k; ++j) {
    Rational num = 1, den = 1;
    for (int m = 1; m <= k; ++m)
      if (m != j) num *= -m;
    for (int m = 0; m <= k; ++m)
      if (m != j) den *= j - m;
    w[j] = num / den;
  }
  return w;
}

RepModel from_dense(std::string name, const std::vector<Matrix<Rational>>& images, int size) {
  RepModel m;
  m.name = std::move(name);
  m.size = size;
  m.dim = static_cast<int>(images.size());
  for (const auto& img : images) {
    std::vector<SparseEntry> e;
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        if (!is_zero(img(r, c))) e.push_back({r, c, img(r, c)});
    m.images.push_back(std::move(e));
  }
  return m;
}

bool is_classical(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::D; }

std::vector<int> generator_degrees(const RootDatum& d) {
  std::vector<int> out;
  for (int m : d.exponents()) out.push_back(m + 1);
  return out;
}

std::string json_degrees(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<Vec<Rational>> random_tuple(std::mt19937_64& rng, int n, int dim, int max_den) {
  std::vector<Vec<Rational>> t;
  for (int i = 0; i < n; ++i) t.push_back(random_vector(rng, dim, max_den));
  return t;
}

template <class F>
std::vector<Vec<F>> convert_tuple(const std::vector<Vec<Rational>>& t, const F& proto) {
  std::vector<Vec<F>> out;
  for (const auto& v : t) out.push_back(from_rational(v, proto));
  return out;
}

/// Rank of forms x tuples, exactly or modulo p. Throws std::domain_error if p
/// divides a denominator.
std::size_t evaluation_rank_mod(const std::vector<InvariantForm>& forms,
                                const std::vector<std::vector<Vec<Rational>>>& tuples, std::uint64_t p,
                                Matrix<ModP>* out = nullptr) {
  const ModP proto(1, p);
  Matrix<ModP> m(forms.size(), tuples.size(), ModP(0, p));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j) m(i, j) = forms[i].evaluate(convert_tuple(tuples[j], proto));
  if (out) *out = m;
  return rank(m);
}

std::size_t evaluation_rank_exact(const std::vector<InvariantForm>& forms,
                                  const std::vector<std::vector<Vec<Rational>>>& tuples,
                                  Matrix<Rational>* out = nullptr) {
  Matrix<Rational> m(forms.size(), tuples.size(), Rational(0));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j) m(i, j) = forms[i].evaluate(tuples[j]);
  if (out) *out = m;
  return rank(m);
}

/// Next usable prime >= p for the given inputs: tries the conversion and
/// advances on a denominator hit.
std::uint64_t usable_prime(std::uint64_t p, const std::vector<std::vector<Vec<Rational>>>& tuples) {
  for (;;) {
    p = next_prime(p);
    try {
      for (const auto& t : tuples)
        for (const auto& v : t) from_rational(v, ModP(1, p));
      return p;
    } catch (const std::domain_error&) {
      ++p;
    }
  }
}

}  // namespace

// --- scalars ---------------------------------------------------------------

Vec<Rational> random_vector(std::mt19937_64& rng, int dim, int max_den) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, std::max(1, max_den));
  Vec<Rational> v(dim);
  for (auto& x : v) {
    x = Rational(num(rng));
    x /= den(rng);
  }
  return v;
}

std::uint64_t auto_prime(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return next_prime((1ULL << 31) + 1 + (z % (1ULL << 24)));
}

// --- representations -------------------------------------------------------

template <class F>
Matrix<F> RepModel::represent(const Vec<F>& v) const {
  if (static_cast<int>(v.size()) != dim) throw InvalidInput("vector length does not match the model");
  const F zero = zero_like(v[0]);
  Matrix<F> m(size, size, zero);
  for (int a = 0; a < dim; ++a) {
    if (is_zero(v[a])) continue;
    for (const auto& e : images[a]) m(e.row, e.col) += from_rational(e.value, v[a]) * v[a];
  }
  return m;
}
template Matrix<Rational> RepModel::represent(const Vec<Rational>&) const;
template Matrix<ModP> RepModel::represent(const Vec<ModP>&) const;
template Matrix<Integer> RepModel::represent(const Vec<Integer>&) const;

RepModel adjoint_model(const LieRealization& g) {
  RepModel m;
  m.name = "adjoint " + g.datum().name();
  m.size = m.dim = g.dim();
  for (int a = 0; a < g.dim(); ++a) {
    auto img = g.ad_basis(a);
    std::vector<SparseEntry> e;
    for (int r = 0; r < g.dim(); ++r)
      for (int c = 0; c < g.dim(); ++c)
        if (img(r, c) != 0) e.push_back({r, c, Rational(static_cast<long>(img(r, c)))});
    m.images.push_back(std::move(e));
  }
  return m;
}

RepModel natural_model(const LieRealization& g) {
  auto nat = natural_representation(g);
  if (!nat) throw InvalidInput("no natural matrix model for " + g.datum().name());
  RepModel m = from_dense("natural " + nat->name, nat->images, nat->size);
  if (g.datum().family() != Family::A) m.form = nat->form;
  return m;
}

RepModel pullback(const RepModel& m, const Matrix<Rational>& emb) {
  if (static_cast<int>(emb.rows()) != m.dim) throw InvalidInput("embedding does not land in the model's domain");
  RepModel out;
  out.name = m.name + " (pulled back)";
  out.size = m.size;
  out.dim = static_cast<int>(emb.cols());
  out.form = m.form;
  for (std::size_t c = 0; c < emb.cols(); ++c) {
    Matrix<Rational> acc(m.size, m.size, Rational(0));
    for (int b = 0; b < m.dim; ++b) {
      if (is_zero(emb(b, c))) continue;
      for (const auto& e : m.images[b]) acc(e.row, e.col) += emb(b, c) * e.value;
    }
    std::vector<SparseEntry> e;
    for (int r = 0; r < m.size; ++r)
      for (int s = 0; s < m.size; ++s)
        if (!is_zero(acc(r, s))) e.push_back({r, s, acc(r, s)});
    out.images.push_back(std::move(e));
  }
  return out;
}

// --- polynomials -----------------------------------------------------------

const char* poly_kind_name(PolyKind k) { return k == PolyKind::TracePower ? "trace_power" : "pfaffian"; }

InvariantPolynomial::InvariantPolynomial(int degree, PolyKind kind, std::shared_ptr<const RepModel> model,
                                         Rational scale)
    : degree_(degree), kind_(kind), model_(std::move(model)), scale_(std::move(scale)) {
  if (degree_ < 1) throw InvalidInput("polynomial degree must be positive");
  if (kind_ == PolyKind::Pfaffian && (!model_->form || model_->size != 2 * degree_))
    throw InvalidInput("the Pfaffian needs an orthogonal model of size 2k");
}

std::string InvariantPolynomial::describe() const {
  std::string s = kind_ == PolyKind::TracePower ? "tr(X^" + std::to_string(degree_) + ")" : "Pf(J X)";
  s += " in " + model_->name;
  if (scale_ != 1) s = to_string(scale_) + " * " + s;
  return s;
}

InvariantPolynomial InvariantPolynomial::scaled(const Rational& c) const {
  return InvariantPolynomial(degree_, kind_, model_, scale_ * c);
}

InvariantPolynomial InvariantPolynomial::pulled_back(const Matrix<Rational>& emb) const {
  return InvariantPolynomial(degree_, kind_, std::make_shared<RepModel>(pullback(*model_, emb)), scale_);
}

template <class F>
F InvariantPolynomial::evaluate(const Vec<F>& v) const {
  Matrix<F> x = model_->represent(v);
  F out;
  if (kind_ == PolyKind::TracePower) {
    out = trace_power(x, degree_);
  } else {
    Matrix<F> j(model_->size, model_->size, zero_like(v[0]));
    for (int r = 0; r < model_->size; ++r)
      for (int c = 0; c < model_->size; ++c) j(r, c) = from_rational((*model_->form)(r, c), v[0]);
    out = pfaffian(j * x, one_like(v[0]));
  }
  return out * from_rational(scale_, v[0]);
}

template <class F>
F InvariantPolynomial::polarize(const std::vector<Vec<F>>& args) const {
  const int k = degree_;
  if (static_cast<int>(args.size()) != k) throw InvalidInput("polarization needs exactly k arguments");
  const F& proto = args[0][0];
  F sum = zero_like(proto);
  if (kind_ == PolyKind::TracePower) {
    std::vector<Matrix<F>> xs;
    for (const auto& a : args) xs.push_back(model_->represent(a));
    // Cyclicity of the trace: fix the first factor.
    std::vector<int> rest(k - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
      if (k == 1) {
        sum += trace(xs[0]);
        break;
      }
      Matrix<F> p = xs[0];
      for (int i = 0; i + 1 < k - 1; ++i) p = p * xs[rest[i]];
      sum += trace_of_product(p, xs[rest.back()]);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return sum * from_rational(scale_ / factorial(k - 1), proto);
  }
  // Inclusion-exclusion: P = (1/k!) sum_S (-1)^(k-|S|) p(sum_{i in S} a_i).
  const std::size_t n = args[0].size();
  for (unsigned s = 1; s < (1u << k); ++s) {
    Vec<F> v(n, zero_like(proto));
    int size = 0;
    for (int i = 0; i < k; ++i)
      if (s & (1u << i)) {
        ++size;
        for (std::size_t c = 0; c < n; ++c) v[c] += args[i][c];
      }
    F val = evaluate(v);
    if ((k - size) % 2) sum -= val;
    else sum += val;
  }
  return sum * from_rational(Rational(1) / factorial(k), proto);
}

template <class F>
F InvariantPolynomial::derivative(const Vec<F>& v, const Vec<F>& w) const {
  const F& proto = v[0];
  if (kind_ == PolyKind::TracePower) {
    F t = trace_power_times(model_->represent(v), degree_, model_->represent(w));
    return t * from_rational(scale_ * degree_, proto);
  }
  auto wts = derivative_weights(degree_);
  F sum = zero_like(proto);
  for (int j = 0; j <= degree_; ++j) {
    Vec<F> x = v;
    F t = scalar_like<F>(j, proto);
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += t * w[c];
    sum += from_rational(wts[j], proto) * evaluate(x);
  }
  return sum;
}

template Rational InvariantPolynomial::evaluate(const Vec<Rational>&) const;
template ModP InvariantPolynomial::evaluate(const Vec<ModP>&) const;
template Rational InvariantPolynomial::polarize(const std::vector<Vec<Rational>>&) const;
template ModP InvariantPolynomial::polarize(const std::vector<Vec<ModP>>&) const;
template Rational InvariantPolynomial::derivative(const Vec<Rational>&, const Vec<Rational>&) const;
template ModP InvariantPolynomial::derivative(const Vec<ModP>&, const Vec<ModP>&) const;

InvariantPolynomial invariant_polynomial(const LieRealization& g, int k, PolyKind kind, RepChoice rep) {
  const auto& d = g.datum();
  auto degrees = generator_degrees(d);
  if (std::find(degrees.begin(), degrees.end(), k) == degrees.end())
    throw InvalidInput(std::to_string(k) + " is not a basic invariant degree of " + d.name() + " (degrees " +
                       json_degrees(degrees) + ")");
  if (kind == PolyKind::Pfaffian) {
    if (d.family() != Family::D || k != d.rank()) throw InvalidInput("the Pfaffian is the degree-l invariant of D_l only");
    return InvariantPolynomial(k, kind, std::make_shared<RepModel>(natural_model(g)));
  }
  if (rep == RepChoice::Auto) rep = is_classical(d.family()) ? RepChoice::Natural : RepChoice::Adjoint;
  auto model = std::make_shared<RepModel>(rep == RepChoice::Natural ? natural_model(g) : adjoint_model(g));
  InvariantPolynomial p(k, kind, model);

  // Vanishing test: three modular points, confirmed exactly at one point.
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(k));
  const std::uint64_t prime = auto_prime(k);
  bool nonzero = false;
  Vec<Rational> probe;
  for (int t = 0; t < 3 && !nonzero; ++t) {
    probe = random_vector(rng, g.dim(), 1);
    nonzero = !is_zero(p.evaluate(from_rational(probe, ModP(1, prime))));
  }
  if (!nonzero && is_zero(p.evaluate(probe)))
    throw InvalidInput("tr(X^" + std::to_string(k) + ") vanishes identically in the " + model->name +
                       " representation; use the pfaffian kind or another representation");
  return p;
}

std::vector<InvariantPolynomial> invariant_generators(const LieRealization& g, int k) {
  const auto& d = g.datum();
  if (d.family() == Family::D && k == d.rank()) {
    std::vector<InvariantPolynomial> out;
    if (k % 2 == 0) out.push_back(invariant_polynomial(g, k));
    out.push_back(invariant_polynomial(g, k, PolyKind::Pfaffian));
    return out;
  }
  return {invariant_polynomial(g, k)};
}

// --- forms -----------------------------------------------------------------

const char* form_kind_name(FormKind k) { return k == FormKind::AltTrace ? "alt_trace" : "transgression"; }

InvariantForm InvariantForm::alt_trace(std::shared_ptr<const RepModel> model, int d) {
  if (d < 1) throw InvalidInput("form degree must be positive");
  InvariantForm f;
  f.degree_ = d;
  f.kind_ = FormKind::AltTrace;
  f.model_ = std::move(model);
  return f;
}

InvariantForm InvariantForm::transgression(const LieRealization& g, InvariantPolynomial p) {
  if (p.degree() < 2) throw InvalidInput("transgression needs degree >= 2");
  if (p.degree() > 5) throw CapExceeded("transgression expansion above degree 5; use the alt_trace construction");
  if (p.input_dim() != g.dim()) throw InvalidInput("polynomial and algebra dimensions differ");
  InvariantForm f;
  f.degree_ = 2 * p.degree() - 1;
  f.kind_ = FormKind::Transgression;
  f.poly_ = std::make_shared<InvariantPolynomial>(std::move(p));
  f.lie_ = &g;
  return f;
}

int InvariantForm::input_dim() const {
  if (pre_) return static_cast<int>(pre_->cols());
  return kind_ == FormKind::AltTrace ? model_->dim : lie_->dim();
}

std::string InvariantForm::describe() const {
  std::string s = kind_ == FormKind::AltTrace
                      ? "alt_trace_" + std::to_string(degree_) + " in " + model_->name
                      : "tau(" + poly_->describe() + ")";
  if (scale_ != 1) s = to_string(scale_) + " * " + s;
  if (pre_) s += " restricted to " + restriction_label_;
  return s;
}

InvariantForm InvariantForm::scaled(const Rational& c) const {
  InvariantForm f = *this;
  f.scale_ *= c;
  return f;
}

InvariantForm InvariantForm::restricted(const Matrix<Rational>& emb, std::string label) const {
  if (static_cast<int>(emb.rows()) != input_dim()) throw InvalidInput("embedding does not land in the form's domain");
  InvariantForm f = *this;
  f.pre_ = std::make_shared<Matrix<Rational>>(pre_ ? (*pre_) * emb : emb);
  f.restriction_label_ = pre_ ? restriction_label_ + " then " + label : std::move(label);
  return f;
}

template <class F>
F InvariantForm::evaluate(const std::vector<Vec<F>>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw InvalidInput("form expects exactly d arguments");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != input_dim()) throw InvalidInput("argument dimension mismatch");
  F val;
  if (pre_) {
    std::vector<Vec<F>> mapped;
    for (const auto& a : args) mapped.push_back(map_vector(*pre_, a));
    val = evaluate_direct(mapped);
  } else {
    val = evaluate_direct(args);
  }
  return val * from_rational(scale_, args[0][0]);
}

template <class F>
F InvariantForm::evaluate_direct(const std::vector<Vec<F>>& args) const {
  const int d = degree_;
  const F& proto = args[0][0];
  if (kind_ == FormKind::AltTrace) {
    std::vector<Matrix<F>> xs;
    for (const auto& a : args) xs.push_back(model_->represent(a));
    // A(S) = sum_{i in S} (-1)^{#(S below i)} X_i A(S \ i) over subsets of
    // the arguments 2..d; the full sum is d tr(X_1 A(all)) by cyclicity.
    const int m = d - 1;
    const F one = one_like(proto);
    std::vector<Matrix<F>> table(std::size_t{1} << m);
    table[0] = Matrix<F>::identity(model_->size, one);
    for (unsigned s = 1; s < (1u << m); ++s) {
      Matrix<F> acc(model_->size, model_->size, zero_like(proto));
      int below = 0;
      for (int i = 0; i < m; ++i) {
        if (!(s & (1u << i))) continue;
        Matrix<F> t = xs[i + 1] * table[s & ~(1u << i)];
        if (below % 2) acc = acc - t;
        else acc = acc + t;
        ++below;
      }
      table[s] = std::move(acc);
    }
    return trace_of_product(xs[0], table[(1u << m) - 1]) * scalar_like<F>(d, proto);
  }
  if constexpr (std::is_same_v<F, Integer>) {
    throw std::domain_error("integer evaluation covers alt_trace forms only");
  } else {
    // Transgression: group permutations by (first argument, perfect matching
    // of the rest); each class has 2^(k-1) (k-1)! members with equal terms.
    const int k = poly_->degree();
    std::vector<std::vector<Vec<F>>> br(d, std::vector<Vec<F>>(d));
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) br[a][b] = lie_->bracket(args[a], args[b]);
    F sum = zero_like(proto);
    std::vector<int> seq;
    std::vector<Vec<F>> pargs;
    std::vector<bool> used(d, false);
    std::function<void()> match = [&]() {
      int a = 0;
      while (a < d && used[a]) ++a;
      if (a == d) {
        F v = poly_->polarize(pargs);
        if (inversion_parity(seq)) sum -= v;
        else sum += v;
        return;
      }
      used[a] = true;
      for (int b = a + 1; b < d; ++b) {
        if (used[b]) continue;
        used[b] = true;
        seq.push_back(a);
        seq.push_back(b);
        pargs.push_back(br[a][b]);
        match();
        pargs.pop_back();
        seq.pop_back();
        seq.pop_back();
        used[b] = false;
      }
      used[a] = false;
    };
    for (int i = 0; i < d; ++i) {
      used[i] = true;
      seq = {i};
      pargs = {args[i]};
      match();
      used[i] = false;
    }
    return sum * scalar_like<F>((1LL << (k - 1)) * factorial(k - 1), proto);
  }
}

template Rational InvariantForm::evaluate(const std::vector<Vec<Rational>>&) const;
template ModP InvariantForm::evaluate(const std::vector<Vec<ModP>>&) const;
template Integer InvariantForm::evaluate(const std::vector<Vec<Integer>>&) const;

InvariantForm transgress(const LieRealization& g, const InvariantPolynomial& p) {
  return InvariantForm::transgression(g, p);
}

InvariantForm restrict_form(const InvariantForm& form, const SubalgebraEmbedding& k) {
  Matrix<Rational> emb(form.input_dim(), k.basis.size(), Rational(0));
  for (std::size_t j = 0; j < k.basis.size(); ++j)
    for (int i = 0; i < form.input_dim(); ++i) emb(i, j) = k.basis[j][i];
  return form.restricted(emb, "fixed subalgebra");
}

// --- checks ----------------------------------------------------------------

CheckRecord check_polynomial_invariance(const LieRealization& g, const InvariantPolynomial& p, std::uint64_t seed,
                                        int samples) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r{"polynomial_ad_invariant", "p is Ad-invariant: d/dt p(v + t[z,v]) = 0",
                {{"type", g.datum().name()}, {"polynomial", p.describe()}, {"samples", samples}}};
  std::mt19937_64 rng(seed);
  bool invariant = true, nonzero = false;
  for (int s = 0; s < samples; ++s) {
    auto z = random_vector(rng, g.dim()), v = random_vector(rng, g.dim());
    invariant = invariant && is_zero(p.derivative(v, g.bracket(z, v)));
    nonzero = nonzero || !is_zero(p.evaluate(v));
  }
  r.witness = {{"invariant_on_all_samples", invariant}, {"nonzero_somewhere", nonzero}};
  r.verdict = verdict_of(invariant && nonzero);
  r.seconds = seconds_since(t0);
  return r;
}

CheckRecord check_form_invariance(const LieRealization& lie, const InvariantForm& form, std::uint64_t seed,
                                  int samples) {
  auto t0 = std::chrono::steady_clock::now();
  const int d = form.degree();
  CheckRecord r{"form_alternating_invariant", "omega is alternating and ad-invariant",
                {{"type", lie.datum().name()}, {"form", form.describe()}, {"samples", samples}}};
  std::mt19937_64 rng(seed);
  // Integer inputs above degree 7 keep exact evaluation cheap.
  const int den = d > 7 ? 1 : 3;
  auto eval = [&form](const std::vector<Vec<Rational>>& args) -> Rational {
    try {
      return Rational(form.evaluate(convert_tuple(args, Integer(1))));
    } catch (const std::domain_error&) {
      return form.evaluate(args);
    }
  };
  bool alternating = true, invariant = true, nonzero = false;
  for (int s = 0; s < samples; ++s) {
    auto args = random_tuple(rng, d, lie.dim(), den);
    nonzero = nonzero || !is_zero(eval(args));
    if (d >= 2) {
      auto rep = args;
      rep[d - 1] = rep[0];
      alternating = alternating && is_zero(eval(rep));
    }
    auto z = random_vector(rng, lie.dim(), den);
    Rational total = 0;
    for (int i = 0; i < d; ++i) {
      auto moved = args;
      moved[i] = lie.bracket(z, args[i]);
      total += eval(moved);
    }
    invariant = invariant && is_zero(total);
  }
  r.witness = {{"alternating", alternating}, {"invariant", invariant}, {"nonzero_somewhere", nonzero}};
  r.verdict = verdict_of(alternating && invariant && nonzero);
  r.seconds = seconds_since(t0);
  return r;
}

PrimitiveSpace primitive_space(const LieRealization& g, int d, const EvalPolicy& policy) {
  if (d < 1 || d % 2 == 0) throw InvalidInput("primitive degrees are odd");
  auto t0 = std::chrono::steady_clock::now();
  PrimitiveSpace ps;
  ps.degree = d;
  for (int m : g.datum().exponents()) ps.expected_dim += 2 * m + 1 == d;
  const int k = (d + 1) / 2;
  if (ps.expected_dim > 0) {
    for (auto& p : invariant_generators(g, k)) {
      if (p.kind() == PolyKind::TracePower)
        ps.basis.push_back(InvariantForm::alt_trace(std::make_shared<RepModel>(p.model()), d));
      else
        ps.basis.push_back(transgress(g, p));
    }
  }
  CheckRecord r{"primitive_dimension", "dim P_d = #{i : n_i = d}",
                {{"type", g.datum().name()}, {"d", d}}};
  std::vector<std::string> names;
  for (const auto& f : ps.basis) names.push_back(f.describe());
  std::size_t rk = 0;
  std::string how = "none";
  if (!ps.basis.empty()) {
    std::mt19937_64 rng(policy.seed ^ (0x9d0ULL + static_cast<std::uint64_t>(d)));
    std::vector<std::vector<Vec<Rational>>> tuples;
    for (std::size_t t = 0; t < ps.basis.size() + 2; ++t) tuples.push_back(random_tuple(rng, d, g.dim(), 1));
    if (d > 7) {
      std::uint64_t p = usable_prime(policy.prime.value_or(auto_prime(policy.seed)), tuples);
      rk = evaluation_rank_mod(ps.basis, tuples, p);
      how = "mod " + std::to_string(p);
    }
    if (rk < ps.basis.size()) {
      rk = evaluation_rank_exact(ps.basis, tuples);
      how = "exact";
    }
  }
  r.witness = {{"expected_dim", ps.expected_dim}, {"constructed", names}, {"evaluation_rank", rk},
               {"rank_certified", how}};
  r.verdict = verdict_of(static_cast<int>(ps.basis.size()) == ps.expected_dim && rk == ps.basis.size());
  r.seconds = seconds_since(t0);
  ps.checks.push_back(r);
  return ps;
}

CheckRecord check_constructions_proportional(const LieRealization& g, int k, std::uint64_t seed, int samples) {
  auto t0 = std::chrono::steady_clock::now();
  auto p = invariant_polynomial(g, k);
  auto alt = InvariantForm::alt_trace(std::make_shared<RepModel>(p.model()), 2 * k - 1);
  auto tau = transgress(g, p);
  CheckRecord r{"constructions_proportional", "transgression and alternating trace span the same line",
                {{"type", g.datum().name()}, {"polynomial", p.describe()}, {"samples", samples}}};
  std::mt19937_64 rng(seed);
  std::optional<Rational> ratio;
  bool ok = true;
  for (int s = 0; s < samples; ++s) {
    auto args = random_tuple(rng, 2 * k - 1, g.dim(), 3);
    Rational a = alt.evaluate(args), t = tau.evaluate(args);
    if (is_zero(a)) {
      ok = ok && is_zero(t);
      continue;
    }
    Rational q = t / a;
    if (!ratio) ratio = q;
    ok = ok && q == *ratio;
  }
  ok = ok && ratio && !is_zero(*ratio);
  r.witness = {{"ratio", ratio ? to_string(*ratio) : "undetermined"}};
  r.verdict = verdict_of(ok);
  r.seconds = seconds_since(t0);
  return r;
}

CheckRecord hitchin_check(const LieRealization& g, const IsotypicDecomposition& dec, int d,
                          const std::vector<InvariantForm>& forms, const EvalPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<Vec<Rational>>> tuples;
  for (const auto& c : dec.components)
    if (c.dim() == d) tuples.push_back(c.vectors);
  if (tuples.empty()) throw InvalidInput("no component of dimension " + std::to_string(d));
  if (forms.empty()) throw InvalidInput("empty form basis for degree " + std::to_string(d));

  std::vector<std::string> names;
  for (const auto& f : forms) names.push_back(f.describe());
  CheckRecord r{"hitchin_nonvanishing", "there exists an irreducible V_omega of dimension d with omega|V_omega != 0",
                {{"type", g.datum().name()}, {"d", d}, {"forms", names}, {"components", tuples.size()},
                 {"mode", policy.mode == Arithmetic::Exact ? "exact" : "modular"}}};
  auto value_json = [](const auto& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m(i, j))>, Rational>)
          row.push_back(to_string(m(i, j)));
        else
          row.push_back(m(i, j).value());
      }
      rows.push_back(row);
    }
    return rows;
  };

  const std::size_t want = forms.size();
  bool certified = false;
  std::string method;
  if (policy.mode == Arithmetic::Modular) {
    nlohmann::json residues = nlohmann::json::array();
    std::uint64_t p = policy.prime.value_or(auto_prime(policy.seed));
    bool all_full = true;
    for (int i = 0; i < 3; ++i) {
      p = usable_prime(p, tuples);
      Matrix<ModP> m;
      std::size_t rk = evaluation_rank_mod(forms, tuples, p, &m);
      nlohmann::json e{{"prime", p}, {"values", value_json(m)}, {"rank", rk}};
      if (want == tuples.size() && want > 1) e["det"] = determinant(m, ModP(1, p)).value();
      residues.push_back(e);
      all_full = all_full && rk == want;
      ++p;
    }
    r.witness["modular"] = residues;
    if (all_full) {
      certified = true;
      method = "nonzero at 3 primes";
    }
  }
  if (!certified) {
    Matrix<Rational> m;
    std::size_t rk = evaluation_rank_exact(forms, tuples, &m);
    nlohmann::json e{{"values", value_json(m)}, {"rank", rk}};
    if (want == tuples.size() && want > 1) e["det"] = to_string(determinant(m, Rational(1)));
    r.witness["exact"] = e;
    certified = rk == want;
    method = "exact";
  }
  r.witness["certified_by"] = method;
  r.verdict = verdict_of(certified);
  r.seconds = seconds_since(t0);
  return r;
}

AbstractEmbedding abstract_embedding(const FoldingSpec& spec, const LieRealization& g,
                                     const SubalgebraEmbedding& fixed) {
  AbstractEmbedding out{LieRealization::build(spec.target), Matrix<Rational>(), {}};
  const auto& k = out.k;
  using V = Vec<Rational>;
  std::function<V(const V&, const V&)> br = [&g](const V& a, const V& b) { return g.bracket(a, b); };
  std::function<V(const V&, const Rational&)> sc = [](V a, const Rational& s) {
    for (auto& x : a) x *= s;
    return a;
  };
  auto imgs = extend_generators<V>(k, fixed.H, fixed.E, fixed.F, br, sc);
  out.map = Matrix<Rational>(g.dim(), k.dim(), Rational(0));
  for (int c = 0; c < k.dim(); ++c)
    for (int rr = 0; rr < g.dim(); ++rr) out.map(rr, c) = imgs[c][rr];

  CheckRecord r{"embedding_is_homomorphism", "the fixed subalgebra is a copy of k",
                {{"source", g.datum().name()}, {"target", k.datum().name()}}};
  int bad = 0;
  for (int a = 0; a < k.dim(); ++a)
    for (int b = a + 1; b < k.dim(); ++b) {
      V lhs(g.dim(), Rational(0));
      for (const auto& t : k.bracket_basis(a, b))
        for (int rr = 0; rr < g.dim(); ++rr) lhs[rr] += Rational(static_cast<long>(t.coeff)) * imgs[t.index][rr];
      if (lhs != g.bracket(imgs[a], imgs[b])) ++bad;
    }
  bool injective = static_cast<int>(rank(out.map)) == k.dim();
  r.witness = {{"bad_pairs", bad}, {"injective", injective}};
  r.verdict = verdict_of(bad == 0 && injective);
  out.checks.push_back(r);
  return out;
}

CheckRecord verify_transgression_commutes(const LieRealization& g, const AbstractEmbedding& emb,
                                          const InvariantPolynomial& p, std::uint64_t seed, int samples) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& k = emb.k;
  auto lhs = transgress(g, p).restricted(emb.map, k.datum().name());
  auto rhs = transgress(k, p.pulled_back(emb.map));
  CheckRecord r{"transgression_commutes", "restriction commutes with transgression",
                {{"source", g.datum().name()}, {"target", k.datum().name()}, {"polynomial", p.describe()},
                 {"d", lhs.degree()}, {"samples", samples}, {"seed", seed}}};
  std::mt19937_64 rng(seed);
  int agree = 0, nonzero = 0;
  nlohmann::json mismatch;
  for (int s = 0; s < samples; ++s) {
    auto args = random_tuple(rng, lhs.degree(), k.dim(), 3);
    Rational a = lhs.evaluate(args), b = rhs.evaluate(args);
    if (a == b) ++agree;
    else if (mismatch.is_null()) mismatch = {{"sample", s}, {"restricted", to_string(a)}, {"transgressed", to_string(b)}};
    if (!is_zero(a)) ++nonzero;
  }
  r.witness = {{"agreeing", agree}, {"nonzero_values", nonzero}};
  if (!mismatch.is_null()) r.witness["first_mismatch"] = mismatch;
  // A zero polynomial must give zero on both sides; otherwise demand content.
  bool expect_nonzero = !is_zero(p.scale());
  r.verdict = verdict_of(agree == samples && (!expect_nonzero || nonzero > 0));
  r.seconds = seconds_since(t0);
  return r;
}

CheckRecord chevalley_restriction_check(const FoldingSpec& spec, const LieRealization& g,
                                        const SubalgebraEmbedding& fixed, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r{"chevalley_restriction_surjective", "S(g*)^g -> S(k*)^k is surjective",
                {{"source", g.datum().name()}, {"target", spec.target.name()}, {"seed", seed}}};
  auto gexp = g.datum().exponents(), kexp = spec.target.exponents();
  std::vector<int> pool = gexp;
  bool sub = true;
  for (int m : kexp) {
    auto it = std::find(pool.begin(), pool.end(), m);
    if (it == pool.end()) sub = false;
    else pool.erase(it);
  }
  r.witness["k_exponents_in_g_exponents"] = sub;
  if (!sub) {
    r.verdict = Verdict::Fail;
    return r;
  }
  std::vector<InvariantPolynomial> polys;
  std::vector<std::string> names;
  for (int m : kexp) {
    polys.push_back(invariant_generators(g, m + 1).front());
    names.push_back(polys.back().describe());
  }
  const int l = static_cast<int>(fixed.H.size());
  std::mt19937_64 rng(seed);
  std::size_t rk = 0;
  int tries = 0;
  nlohmann::json point;
  while (rk < polys.size() && tries < 5) {
    ++tries;
    auto t = random_vector(rng, l, 3);
    Vec<Rational> x(g.dim(), Rational(0));
    for (int j = 0; j < l; ++j)
      for (int a = 0; a < g.dim(); ++a) x[a] += t[j] * fixed.H[j][a];
    Matrix<Rational> jac(polys.size(), l, Rational(0));
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (int j = 0; j < l; ++j) jac(i, j) = polys[i].derivative(x, fixed.H[j]);
    rk = rank(jac);
    point = nlohmann::json::array();
    for (const auto& q : t) point.push_back(to_string(q));
  }
  r.witness["polynomials"] = names;
  r.witness["jacobian_rank"] = rk;
  r.witness["rank_k"] = l;
  r.witness["points_tried"] = tries;
  r.witness["last_point"] = point;
  r.verdict = verdict_of(static_cast<int>(rk) == l && static_cast<int>(polys.size()) == l);
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace liefold

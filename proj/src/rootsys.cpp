#include "liefold/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace liefold {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(char c) {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G') throw InvalidInput(std::string("unknown Lie type family '") + c + "'");
  return static_cast<Family>(c - 'A');
}

// --- Weight ---------------------------------------------------------------

Weight Weight::fundamental(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("fundamental weight index out of range");
  Weight w = zero(rank);
  w.coords[i - 1] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

// --- Cartan matrices ------------------------------------------------------

namespace {

IntMatrix chain(int n) {
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

IntMatrix cartan_for(Family f, int l) {
  switch (f) {
    case Family::A:
      if (l < 1) break;
      return chain(l);
    case Family::B: {
      if (l < 2) break;
      auto c = chain(l);
      c[l - 1][l - 2] = -2;  // alpha_l short
      return c;
    }
    case Family::C: {
      if (l < 2) break;
      auto c = chain(l);
      c[l - 2][l - 1] = -2;  // alpha_l long
      return c;
    }
    case Family::D: {
      if (l < 3) break;
      auto c = chain(l);
      c[l - 2][l - 1] = c[l - 1][l - 2] = 0;
      c[l - 3][l - 1] = c[l - 1][l - 3] = -1;
      return c;
    }
    case Family::E: {
      if (l != 6) break;
      IntMatrix c(6, std::vector<long long>(6, 0));
      for (int i = 0; i < 6; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(2, 4);
      return c;
    }
    case Family::F: {
      if (l != 4) break;
      auto c = chain(4);
      c[2][1] = -2;  // alpha_2 long, alpha_3 short
      return c;
    }
    case Family::G: {
      if (l != 2) break;
      auto c = chain(2);
      c[0][1] = -3;  // alpha_1 short
      return c;
    }
  }
  throw InvalidInput(std::string("invalid simple type ") + family_letter(f) + std::to_string(l));
}

}  // namespace

std::vector<int> reference_exponents(Family family, int l) {
  std::vector<int> e;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= l - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(l - 1);
      break;
    case Family::E:
      if (l == 6) e = {1, 4, 5, 7, 8, 11};
      break;
    case Family::F:
      e = {1, 5, 7, 11};
      break;
    case Family::G:
      e = {1, 5};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

// --- RootDatum ------------------------------------------------------------

RootDatum RootDatum::build(Family family, int rank) {
  return RootDatum(family, rank, cartan_for(family, rank));
}

RootDatum RootDatum::parse(const std::string& name) {
  if (name.size() < 2) throw InvalidInput("type name must look like 'E6'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw InvalidInput("bad rank");
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse rank in type name '" + name + "'");
  }
  return build(parse_family(name[0]), rank);
}

RootDatum::RootDatum(Family family, int rank, IntMatrix cartan)
    : family_(family), rank_(rank), cartan_(std::move(cartan)) {
  const int l = rank_;
  for (int i = 0; i < l; ++i) {
    if (cartan_[i][i] != 2) throw InvariantViolation("Cartan diagonal must be 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw InvariantViolation("positive off-diagonal Cartan entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InvariantViolation("Cartan zero pattern not symmetric");
    }
  }
  auto cq = to_rational(cartan_);
  Rational det = determinant(cq, Rational(1));
  auto inv = inverse(cq, Rational(1));
  if (!inv || det <= 0) throw InvariantViolation("Cartan matrix not positive definite");
  det_ = det.get_num().get_si();
  adjugate_.assign(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational a = (*inv)(i, j) * det;
      if (a.get_den() != 1) throw InvariantViolation("adjugate not integral");
      adjugate_[i][j] = a.get_num().get_si();
    }
  compute_symmetrizer();
  enumerate_positive_roots();
  exponents_ = exponents_via_heights();
  // Dimension bookkeeping: sum of (2m+1) over exponents equals dim g.
  int total = 0;
  for (int m : exponents_) total += 2 * m + 1;
  if (total != dimension() || static_cast<int>(exponents_.size()) != l)
    throw InvariantViolation("exponents inconsistent with root count");
}

void RootDatum::compute_symmetrizer() {
  const int l = rank_;
  std::vector<Rational> d(l, Rational(0));
  d[0] = 1;
  std::deque<int> queue{0};
  std::vector<bool> seen(l, false);
  seen[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      if (j == i || cartan_[i][j] == 0 || seen[j]) continue;
      // d_i C_ij = d_j C_ji
      d[j] = d[i] * Rational(static_cast<long>(cartan_[i][j])) / Rational(static_cast<long>(cartan_[j][i]));
      seen[j] = true;
      queue.push_back(j);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw InvariantViolation("Dynkin diagram not connected");
  Integer lcm = 1;
  for (const auto& x : d) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
  Integer g = 0;
  for (auto& x : d) {
    x *= lcm;
    g = gcd(g, x.get_num());
  }
  symmetrizer_.clear();
  for (const auto& x : d) symmetrizer_.push_back(static_cast<int>(Integer(x.get_num() / g).get_si()));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
        throw InvariantViolation("Cartan matrix not symmetrizable");
}

int RootDatum::height(const RootCoords& r) { return std::accumulate(r.begin(), r.end(), 0); }

void RootDatum::enumerate_positive_roots() {
  const int l = rank_;
  std::set<RootCoords> all;
  std::vector<RootCoords> layer;
  for (int i = 0; i < l; ++i) {
    RootCoords r(l, 0);
    r[i] = 1;
    layer.push_back(r);
    all.insert(r);
  }
  while (!layer.empty()) {
    std::set<RootCoords> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        RootCoords b = beta;
        // p = largest r with beta - r alpha_i a root (beta != alpha_i here
        // unless beta is simple, in which case alpha_i - alpha_i = 0 stops).
        int p = 0;
        for (;;) {
          b[i] -= 1;
          if (!all.count(b)) break;
          ++p;
        }
        long long pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < l; ++j) pairing += static_cast<long long>(beta[j]) * cartan_[i][j];
        long long q = p - pairing;
        if (q > 0) {
          RootCoords up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) all.insert(r);
  }
  positive_roots_.assign(all.begin(), all.end());
  // Height ascending, then lexicographically descending so simple roots come
  // out as alpha_1, ..., alpha_l.
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  root_lookup_.clear();
  positive_root_weights_.clear();
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    root_lookup_[positive_roots_[k]] = static_cast<int>(k);
    positive_root_weights_.push_back(to_weight(positive_roots_[k]));
  }
}

std::string RootDatum::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

int RootDatum::root_index(const RootCoords& r) const {
  auto it = root_lookup_.find(r);
  return it == root_lookup_.end() ? -1 : it->second;
}

bool RootDatum::is_root(const RootCoords& r) const {
  if (root_lookup_.count(r)) return true;
  RootCoords neg(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
  return root_lookup_.count(neg) > 0;
}

Weight RootDatum::simple_root(int j) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = static_cast<int>(cartan_[i][j]);
  return w;
}

Weight RootDatum::to_weight(const RootCoords& r) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * r[j];
    w[i] = static_cast<int>(s);
  }
  return w;
}

std::vector<long long> RootDatum::scaled_root_coords(const Weight& w) const {
  std::vector<long long> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += adjugate_[i][j] * w[j];
  return out;
}

std::optional<RootCoords> RootDatum::to_root_coords(const Weight& w) const {
  auto s = scaled_root_coords(w);
  RootCoords r(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (s[i] % det_ != 0) return std::nullopt;
    r[i] = static_cast<int>(s[i] / det_);
  }
  return r;
}

long long RootDatum::scaled_height(const Weight& w) const {
  auto s = scaled_root_coords(w);
  return std::accumulate(s.begin(), s.end(), 0LL);
}

long long RootDatum::pair_with_root(const Weight& mu, const RootCoords& alpha) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long long>(mu[i]) * alpha[i] * symmetrizer_[i];
  return s;
}

long long RootDatum::root_norm(const RootCoords& alpha) const { return pair_with_root(to_weight(alpha), alpha); }

long long RootDatum::pair_with_coroot(const Weight& mu, const RootCoords& alpha) const {
  long long num = 2 * pair_with_root(mu, alpha);
  long long den = root_norm(alpha);
  if (num % den != 0) throw InvariantViolation("non-integral coroot pairing");
  return num / den;
}

Weight RootDatum::reflect(const Weight& w, int i) const {
  Weight out = w;
  const int k = w[i];
  for (int r = 0; r < rank_; ++r) out[r] -= k * static_cast<int>(cartan_[r][i]);
  return out;
}

DominantConjugate RootDatum::dominant_conjugate(const Weight& w) const {
  DominantConjugate out{w, 0};
  for (;;) {
    int i = 0;
    while (i < rank_ && out.weight[i] >= 0) ++i;
    if (i == rank_) return out;
    out.weight = reflect(out.weight, i);
    out.length_parity ^= 1;
  }
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::vector<Weight> stack{w};
  while (!stack.empty()) {
    Weight cur = std::move(stack.back());
    stack.pop_back();
    for (int i = 0; i < rank_; ++i) {
      if (cur[i] == 0) continue;
      Weight nxt = reflect(cur, i);
      if (seen.insert(nxt).second) stack.push_back(std::move(nxt));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> RootDatum::exponents_via_heights() const {
  std::map<int, int> count;
  int maxh = 0;
  for (const auto& r : positive_roots_) {
    int h = height(r);
    ++count[h];
    maxh = std::max(maxh, h);
  }
  // Number of exponents >= k equals the number of roots of height k.
  std::vector<int> e;
  for (int k = 1; k <= maxh; ++k) {
    int here = count[k] - (count.count(k + 1) ? count[k + 1] : 0);
    for (int t = 0; t < here; ++t) e.push_back(k);
  }
  std::sort(e.begin(), e.end());
  return e;
}

nlohmann::json RootDatum::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["family"] = std::string(1, family_letter(family_));
  j["rank"] = rank_;
  j["cartan"] = cartan_;
  j["exponents"] = exponents_;
  j["symmetrizer"] = symmetrizer_;
  j["positive_root_count"] = positive_roots_.size();
  return j;
}

RootDatum RootDatum::from_json(const nlohmann::json& j) {
  if (j.value("schema", 0) != 1) throw InvalidInput("unsupported root datum schema");
  auto fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw InvalidInput("bad family field");
  RootDatum d = build(parse_family(fam[0]), j.at("rank").get<int>());
  if (j.at("cartan").get<IntMatrix>() != d.cartan_) throw InvalidInput("Cartan matrix mismatch");
  if (j.at("exponents").get<std::vector<int>>() != d.exponents_) throw InvalidInput("exponent mismatch");
  return d;
}

// --- Dimensions and characters --------------------------------------------

Integer weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidInput("weyl_dimension needs a dominant weight, got " + lambda.str());
  Integer num = 1, den = 1;
  Weight lr = lambda + datum.rho();
  for (const auto& a : datum.positive_roots()) {
    num *= static_cast<long>(datum.pair_with_root(lr, a));
    den *= static_cast<long>(datum.pair_with_root(datum.rho(), a));
  }
  if (num % den != 0) throw InvariantViolation("Weyl dimension not integral");
  return num / den;
}

namespace {

void check_character_cap(const RootDatum& datum, const Weight& lambda, const Caps& caps) {
  Integer dim = weyl_dimension(datum, lambda);
  if (dim > static_cast<long>(caps.character_dim))
    throw CapExceeded("character of " + datum.name() + " V" + lambda.str() + " has dimension " + dim.get_str() +
                      " above cap " + std::to_string(caps.character_dim));
}

}  // namespace

Character dominant_multiplicities(const RootDatum& datum, const Weight& lambda, const Caps& caps) {
  check_character_cap(datum, lambda, caps);
  const int l = datum.rank();
  const long long det = datum.cartan_determinant();
  auto rc = datum.scaled_root_coords(lambda);
  std::vector<int> bound(l);
  for (int i = 0; i < l; ++i) bound[i] = static_cast<int>(rc[i] / det);

  // Dominant weights of V(lambda): dominant mu with lambda - mu in Q+.
  struct Entry {
    Weight mu;
    std::vector<int> depth;  // lambda - mu in simple-root coordinates
  };
  std::vector<Entry> dom;
  std::vector<int> c(l, 0);
  for (;;) {
    Weight mu = lambda;
    for (int j = 0; j < l; ++j)
      if (c[j]) mu -= c[j] * datum.simple_root(j);
    if (mu.is_dominant()) dom.push_back({mu, c});
    int k = 0;
    while (k < l && c[k] == bound[k]) c[k++] = 0;
    if (k == l) break;
    ++c[k];
  }
  std::sort(dom.begin(), dom.end(), [](const Entry& a, const Entry& b) {
    int ha = std::accumulate(a.depth.begin(), a.depth.end(), 0);
    int hb = std::accumulate(b.depth.begin(), b.depth.end(), 0);
    if (ha != hb) return ha < hb;
    return a.mu > b.mu;
  });

  Character mult;
  const Weight lr = lambda + datum.rho();
  const auto& roots = datum.positive_roots();
  const auto& root_w = datum.positive_roots_as_weights();
  for (const auto& e : dom) {
    if (e.mu == lambda) {
      mult[e.mu] = 1;
      continue;
    }
    long long num = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = e.mu;
      for (int k = 1;; ++k) {
        nu += root_w[a];
        auto it = mult.find(datum.dominant_conjugate(nu).weight);
        if (it == mult.end() || it->second == 0) break;
        num += it->second * datum.pair_with_root(nu, roots[a]);
      }
    }
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
    Weight s = lr + e.mu + datum.rho();
    long long den = 0;
    for (int i = 0; i < l; ++i) den += static_cast<long long>(e.depth[i]) * datum.symmetrizer()[i] * s[i];
    if (den <= 0 || (2 * num) % den != 0) throw InvariantViolation("Freudenthal recursion produced a non-integer");
    long long m = 2 * num / den;
    if (m > 0) mult[e.mu] = m;
  }
  return mult;
}

Character freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda, const Caps& caps) {
  Character full;
  for (const auto& [mu, m] : dominant_multiplicities(datum, lambda, caps))
    for (const auto& w : datum.weyl_orbit(mu)) full[w] = m;
  return full;
}

// --- Representation ring ---------------------------------------------------

RepRingElement RepRingElement::irreducible(const Weight& w, long long mult) {
  RepRingElement x;
  x.add(w, mult);
  return x;
}

long long RepRingElement::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void RepRingElement::add(const Weight& w, long long m) {
  if (m == 0) return;
  auto& slot = terms_[w];
  slot += m;
  if (slot == 0) terms_.erase(w);
}

RepRingElement& RepRingElement::operator+=(const RepRingElement& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

RepRingElement& RepRingElement::operator-=(const RepRingElement& o) {
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

RepRingElement& RepRingElement::operator*=(long long k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= k;
  return *this;
}

bool RepRingElement::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::string RepRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    long long a = m < 0 ? -m : m;
    if (a != 1) os << a << "*";
    os << "V" << w.str();
    first = false;
  }
  return os.str();
}

nlohmann::json RepRingElement::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, m] : terms_) arr.push_back({{"weight", w.coords}, {"mult", m}});
  return arr;
}

Integer dimension(const RootDatum& datum, const RepRingElement& x) {
  Integer total = 0;
  for (const auto& [w, m] : x.terms()) total += Integer(static_cast<long>(m)) * weyl_dimension(datum, w);
  return total;
}

RepRingElement tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu, const Caps& caps) {
  if (!lambda.is_dominant() || !mu.is_dominant()) throw InvalidInput("tensor_decompose needs dominant weights");
  Integer dl = weyl_dimension(datum, lambda), dm = weyl_dimension(datum, mu);
  if (Integer(dl * dm) > static_cast<long>(caps.dimension_only))
    throw CapExceeded("tensor product dimension " + Integer(dl * dm).get_str() + " above cap");
  // Take the character of the smaller factor.
  const Weight& big = dl >= dm ? lambda : mu;
  const Weight& small = dl >= dm ? mu : lambda;
  RepRingElement out;
  const Weight shift = big + datum.rho();
  for (const auto& [nu, m] : freudenthal_multiplicities(datum, small, caps)) {
    auto dc = datum.dominant_conjugate(shift + nu);
    if (!std::all_of(dc.weight.coords.begin(), dc.weight.coords.end(), [](int x) { return x > 0; })) continue;
    out.add(dc.weight - datum.rho(), dc.length_parity ? -m : m);
  }
  if (!out.is_effective()) throw InvariantViolation("negative multiplicity in tensor product");
  return out;
}

RepRingElement tensor_decompose_by_characters(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                              const Caps& caps) {
  if (!lambda.is_dominant() || !mu.is_dominant()) throw InvalidInput("tensor_decompose needs dominant weights");
  Integer dl = weyl_dimension(datum, lambda), dm = weyl_dimension(datum, mu);
  if (Integer(dl * dm) > static_cast<long>(caps.dimension_only))
    throw CapExceeded("tensor product dimension " + Integer(dl * dm).get_str() + " above cap");
  Character prod = character_product(freudenthal_multiplicities(datum, lambda, caps),
                                     freudenthal_multiplicities(datum, mu, caps));
  Caps wide = caps;
  wide.character_dim = std::max<long long>(caps.character_dim, dl.get_si() * dm.get_si());
  return decompose_character(datum, std::move(prod), wide);
}

RepRingElement multiply(const RootDatum& datum, const RepRingElement& a, const RepRingElement& b, const Caps& caps) {
  RepRingElement out;
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out += (ma * mb) * tensor_decompose(datum, wa, wb, caps);
  return out;
}

RepRingElement decompose_character(const RootDatum& datum, Character chi, const Caps& caps) {
  RepRingElement out;
  for (auto it = chi.begin(); it != chi.end();) it = it->second == 0 ? chi.erase(it) : std::next(it);
  while (!chi.empty()) {
    const Weight* top = nullptr;
    long long top_h = 0;
    for (const auto& [w, m] : chi) {
      if (!w.is_dominant()) continue;
      long long h = datum.scaled_height(w);
      if (!top || h > top_h || (h == top_h && w > *top)) {
        top = &w;
        top_h = h;
      }
    }
    if (!top) throw InvariantViolation("character has no dominant weight left; not Weyl invariant");
    const Weight hw = *top;
    const long long m = chi.at(hw);
    out.add(hw, m);
    for (const auto& [w, k] : freudenthal_multiplicities(datum, hw, caps)) {
      auto& slot = chi[w];
      slot -= m * k;
      if (slot == 0) chi.erase(w);
    }
  }
  return out;
}

Character character_of(const RootDatum& datum, const RepRingElement& x, const Caps& caps) {
  Character chi;
  for (const auto& [w, m] : x.terms())
    for (const auto& [nu, k] : freudenthal_multiplicities(datum, w, caps)) {
      auto& slot = chi[nu];
      slot += m * k;
      if (slot == 0) chi.erase(nu);
    }
  return chi;
}

Character character_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      auto& slot = out[wa + wb];
      slot += ma * mb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Character adams_operation(const Character& a, int k) {
  Character out;
  for (const auto& [w, m] : a) out[k * w] += m;
  return out;
}

long long character_dimension(const Character& chi) {
  long long s = 0;
  for (const auto& [w, m] : chi) s += m;
  return s;
}

Character exterior_power(const Character& chi, int j) {
  if (j < 0) throw InvalidInput("negative exterior power");
  if (chi.empty()) return j == 0 ? Character{} : Character{};
  const int rank = static_cast<int>(chi.begin()->first.size());
  std::vector<Character> e{Character{{Weight::zero(rank), 1}}};
  for (int n = 1; n <= j; ++n) {
    Character acc;
    for (int k = 1; k <= n; ++k) {
      Character term = character_product(adams_operation(chi, k), e[n - k]);
      const long long sign = (k % 2 == 1) ? 1 : -1;
      for (const auto& [w, m] : term) acc[w] += sign * m;
    }
    Character en;
    for (const auto& [w, m] : acc) {
      if (m % n != 0) throw InvariantViolation("Newton identity produced a non-integer");
      if (m != 0) en[w] = m / n;
    }
    e.push_back(std::move(en));
  }
  return e[j];
}

}  // namespace liefold

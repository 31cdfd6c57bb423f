#include "agcolor/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcolor {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be a prime power, got " + std::to_string(q));
  auto factors = prime_factors(q);
  if (factors.size() != 1)
    throw std::invalid_argument("field order must be a prime power, got " + std::to_string(q));
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++m;
  return {static_cast<std::uint32_t>(factors[0]), m};
}

Field field_of_order(std::uint32_t q, FieldLimits limits) {
  auto [p, m] = prime_power_decompose(q);
  return Field::create(p, m, limits);
}

// ---------------------------------------------------------------------------
// Polynomials

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back().index == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  return trim(std::move(out));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  return trim(std::move(out));
}

Poly mod(const Field& f, const Poly& a, const Poly& b) {
  Poly bt = trim(b);
  if (bt.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = trim(a);
  const Element lead_inv = f.inv(bt.back());
  while (r.size() >= bt.size()) {
    const Element c = f.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - bt.size();
    for (std::size_t i = 0; i < bt.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, bt[i]));
    r = trim(std::move(r));
  }
  return r;
}

namespace {

// Monic polynomials of a given degree in lexicographic order of (c_0, ..., c_{d-1}).
template <class Visit>
bool for_each_monic(const Field& f, std::uint32_t deg, Visit&& visit) {
  const std::uint32_t q = f.order();
  Poly p(deg + 1, f.zero());
  p[deg] = f.one();
  std::vector<std::uint32_t> digits(deg, 0);
  while (true) {
    for (std::uint32_t i = 0; i < deg; ++i) p[i] = f.element(digits[i]);
    if (visit(p)) return true;
    // c_0 is the most significant position.
    int pos = static_cast<int>(deg) - 1;
    while (pos >= 0 && ++digits[pos] == q) digits[pos--] = 0;
    if (pos < 0) return false;
  }
}

}  // namespace

bool is_irreducible(const Field& f, const Poly& a) {
  const Poly at = trim(a);
  const int d = degree(at);
  if (d < 1) return false;
  for (std::uint32_t e = 1; e <= static_cast<std::uint32_t>(d) / 2; ++e) {
    bool divides = for_each_monic(f, e, [&](const Poly& g) { return mod(f, at, g).empty(); });
    if (divides) return false;
  }
  return true;
}

Poly least_irreducible(const Field& f, std::uint32_t deg) {
  if (deg == 0) throw std::invalid_argument("irreducible polynomial degree must be positive");
  Poly found;
  for_each_monic(f, deg, [&](const Poly& g) {
    if (!is_irreducible(f, g)) return false;
    found = g;
    return true;
  });
  return found;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Field

Field Field::create(std::uint32_t p, std::uint32_t m, FieldLimits limits) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (m == 0) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > limits.max_order)
      throw std::length_error("field order " + std::to_string(p) + "^" + std::to_string(m) +
                              " exceeds limit " + std::to_string(limits.max_order));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  const std::uint32_t n = t->q;
  t->add.resize(n * n);
  t->mul.resize(n * n);
  t->neg.resize(n);
  t->inv.resize(n);

  if (m == 1) {
    t->modulus = {0, 1};
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        t->add[a * n + b] = (a + b) % p;
        t->mul[a * n + b] = (a * b) % p;
      }
  } else {
    const Field prime = create(p, 1, limits);
    const Poly modulus = poly::least_irreducible(prime, m);
    for (auto c : modulus) t->modulus.push_back(c.index);

    auto to_poly = [&](std::uint32_t idx) {
      Poly out(m, prime.zero());
      for (std::uint32_t i = 0; i < m; ++i, idx /= p) out[i] = prime.element(idx % p);
      return poly::trim(out);
    };
    auto to_index = [&](const Poly& a) {
      std::uint32_t idx = 0;
      for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i].index;
      return idx;
    };
    std::vector<Poly> polys(n);
    for (std::uint32_t a = 0; a < n; ++a) polys[a] = to_poly(a);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        t->add[a * n + b] = to_index(poly::add(prime, polys[a], polys[b]));
        t->mul[a * n + b] = to_index(poly::mod(prime, poly::mul(prime, polys[a], polys[b]), modulus));
      }
  }

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (t->add[a * n + b] == 0) t->neg[a] = b;
      if (a != 0 && t->mul[a * n + b] == 1) t->inv[a] = b;
    }
  }
  return Field(std::move(t));
}

Element Field::element(std::uint32_t index) const {
  if (index >= t_->q)
    throw std::out_of_range("element index " + std::to_string(index) + " outside GF(" + std::to_string(t_->q) + ")");
  return {index};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(t_->q);
  for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = {i};
  return out;
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw std::domain_error("division by zero in GF(" + std::to_string(t_->q) + ")");
  return {t_->inv[a.index]};
}

Element Field::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
  std::vector<std::uint32_t> out(t_->m);
  std::uint32_t idx = a.index;
  for (auto& c : out) {
    c = idx % t_->p;
    idx /= t_->p;
  }
  return out;
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->m) throw std::invalid_argument("coefficient vector has wrong length");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p) throw std::invalid_argument("coefficient out of range");
    idx = idx * t_->p + coeffs[i];
  }
  return {idx};
}

std::uint32_t Field::multiplicative_order(Element a) const {
  if (a.index == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  for (Element x = a; x.index != 1; x = mul(x, a)) ++k;
  return k;
}

Element Field::primitive_element() const {
  for (std::uint32_t i = 1; i < t_->q; ++i)
    if (multiplicative_order({i}) == t_->q - 1) return {i};
  throw std::logic_error("no primitive element found");
}

std::string Field::modulus_string() const {
  std::string out;
  for (std::size_t i = t_->modulus.size(); i-- > 0;) {
    const auto c = t_->modulus[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension

Extension::Extension(Field base, std::uint32_t degree)
    : base_(std::move(base)), degree_(degree), order_(1), modulus_() {
  if (degree == 0) throw std::invalid_argument("extension degree must be at least 1");
  for (std::uint32_t i = 0; i < degree; ++i) order_ *= base_.order();
  modulus_ = poly::least_irreducible(base_, degree);
}

Extension::Value Extension::one() const {
  Value v = zero();
  v[0] = base_.one();
  return v;
}

Extension::Value Extension::generator() const {
  if (degree_ == 1) {
    // x mod (x + c) = -c
    Value v = zero();
    v[0] = base_.neg(modulus_[0]);
    return v;
  }
  Value v = zero();
  v[1] = base_.one();
  return v;
}

Extension::Value Extension::from_index(std::uint64_t index) const {
  Value v = zero();
  for (auto& c : v) {
    c = base_.element(static_cast<std::uint32_t>(index % base_.order()));
    index /= base_.order();
  }
  return v;
}

std::uint64_t Extension::index_of(const Value& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * base_.order() + a[i].index;
  return idx;
}

Extension::Value Extension::add(const Value& a, const Value& b) const {
  Value out(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

Extension::Value Extension::mul(const Value& a, const Value& b) const {
  Poly r = poly::mod(base_, poly::mul(base_, poly::trim(a), poly::trim(b)), modulus_);
  r.resize(degree_, base_.zero());
  return r;
}

Extension::Value Extension::pow(Value a, std::uint64_t e) const {
  Value r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Extension::is_primitive(const Value& a) const {
  if (index_of(a) == 0) return false;
  const std::uint64_t group = order_ - 1;
  if (pow(a, group) != one()) return false;
  for (auto r : prime_factors(group))
    if (pow(a, group / r) == one()) return false;
  return true;
}

Extension::Value Extension::primitive_element() const {
  for (std::uint64_t i = 1; i < order_; ++i) {
    Value v = from_index(i);
    if (is_primitive(v)) return v;
  }
  throw std::logic_error("no primitive element found");
}

}  // namespace agcolor

#include "agcolor/bounds.hpp"

#include <stdexcept>

#include "agcolor/field.hpp"

namespace agcolor {

namespace {

BigInt power(std::uint64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_prime_power(std::uint64_t q) { prime_power_decompose(q); }

BigInt plane_psi(std::uint64_t q) { return BigInt((q + 1) * (q + 1) / 2); }

}  // namespace

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative number");
  BigInt r = boost::multiprecision::sqrt(x);
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

BigInt chromatic_index(int n, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  require_prime_power(q);
  return (power(q, n) - 1) / (q - 1);
}

BigInt line_count(int n, std::uint64_t q) { return power(q, n - 1) * chromatic_index(n, q); }

PsiUpper psi_upper(int n, std::uint64_t q) {
  if (n < 2) throw std::invalid_argument("psi upper bound needs n >= 2");
  require_prime_power(q);
  if (n == 2) return {plane_psi(q), plane_psi(q)};

  const BigInt v = power(q, n);
  const BigInt qm1 = q - 1;
  const BigInt q2p1 = BigInt(q) * q + 1;
  // (sqrt(X) + (q^2+1)(q-1)) / (2(q-1)), floored through the integer root.
  const BigInt x = 4 * v * (v - 1) * (v - BigInt(q) * q) + q2p1 * q2p1 * qm1 * qm1;
  const BigInt exact = (isqrt(x) + q2p1 * qm1) / (2 * qm1);

  // (sqrt(v) * r + (q^2+1)) / 2 with r = 2(v-1)/(q-1) - (q+1) > 0.
  const BigInt r = 2 * (v - 1) / qm1 - (q + 1);
  const BigInt simplified = (isqrt(v * r * r) + q2p1) / 2;
  return {exact, simplified};
}

LowerBounds lower_bounds(int n, std::uint64_t q) {
  if (n < 2) throw std::invalid_argument("lower bounds need n >= 2");
  require_prime_power(q);
  LowerBounds lb;
  lb.n = n;
  lb.q = q;
  if (n == 2) {
    lb.psi = plane_psi(q);
    lb.alpha = BigInt(q + 1);
    lb.exact = true;
    return lb;
  }
  if (n % 2 == 0) {
    const int k = n / 2;
    const BigInt qk = power(q, k);
    const BigInt q2k = power(q, 2 * k);
    if (q % 2 == 1) lb.psi_general = qk * (q2k - 1) / (2 * (q - 1));
    else lb.psi_general = qk * (q2k - q) / (2 * (q - 1)) + 1;
    const int eps = static_cast<int>((qk + 1) % 3);
    lb.epsilon = eps;
    lb.alpha = ((qk + 1 - eps) / 3 * (qk + 2) + eps) * ((qk - 1) / (q - 1));
    lb.psi = lb.psi_general;
    return lb;
  }
  const int k = (n - 1) / 2;
  lb.psi_general = power(q, k + 2) * ((power(q, 2 * k) - 1) / (BigInt(q) * q - 1)) + 1;
  lb.psi = lb.psi_general;
  if (n == 3) {
    lb.alpha = BigInt(q) * (q + 1) * (q + 1) / 2 + 1;
    if (*lb.alpha > *lb.psi) lb.psi = lb.alpha;
  }
  return lb;
}

bool BoundsRow::consistent() const {
  if (chromatic > psi_upper_exact) return false;
  if (psi_lower && *psi_lower > psi_upper_exact) return false;
  if (alpha_lower && *alpha_lower > psi_upper_exact) return false;
  if (n >= 3 && psi_upper_exact > psi_upper_simplified) return false;
  if (plane_exact_psi && *plane_exact_psi > psi_upper_exact) return false;
  return true;
}

BoundsRow bounds_row(int n, std::uint64_t q) {
  BoundsRow row;
  row.n = n;
  row.q = q;
  row.v = power(q, n);
  row.lines = line_count(n, q);
  row.chromatic = chromatic_index(n, q);
  const auto lb = lower_bounds(n, q);
  row.psi_lower = lb.psi;
  row.alpha_lower = lb.alpha;
  const auto up = psi_upper(n, q);
  row.psi_upper_exact = up.exact;
  row.psi_upper_simplified = up.simplified;
  if (n == 2) {
    row.plane_exact_psi = lb.psi;
    row.plane_exact_alpha = lb.alpha;
  }
  return row;
}

std::vector<BoundsRow> bounds_table(const std::vector<int>& ns, const std::vector<std::uint64_t>& qs) {
  std::vector<BoundsRow> rows;
  for (auto q : qs)
    for (auto n : ns) rows.push_back(bounds_row(n, q));
  return rows;
}

std::string bounds_csv_header() {
  return "n,q,v,lines,chromatic,psi_lower,alpha_lower,psi_upper_exact,psi_upper_simplified,plane_exact_psi,"
         "plane_exact_alpha";
}

std::string bounds_csv_line(const BoundsRow& row) {
  auto opt = [](const std::optional<BigInt>& x) { return x ? x->str() : std::string(); };
  return std::to_string(row.n) + "," + std::to_string(row.q) + "," + row.v.str() + "," + row.lines.str() + "," +
         row.chromatic.str() + "," + opt(row.psi_lower) + "," + opt(row.alpha_lower) + "," +
         row.psi_upper_exact.str() + "," + row.psi_upper_simplified.str() + "," + opt(row.plane_exact_psi) + "," +
         opt(row.plane_exact_alpha);
}

}  // namespace agcolor

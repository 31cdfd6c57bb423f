#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace agcolor {

using BigInt = boost::multiprecision::cpp_int;

/// floor(sqrt(x)) for x >= 0.
BigInt isqrt(const BigInt& x);

/// (q^n - 1)/(q - 1).
BigInt chromatic_index(int n, std::uint64_t q);

/// Lines of AG(n, q): q^{n-1}(q^n - 1)/(q - 1).
BigInt line_count(int n, std::uint64_t q);

struct PsiUpper {
  BigInt exact;       // floor of the radical bound
  BigInt simplified;  // floor of q^{n/2}(q^n-1)/(q-1) - q^{n/2}(q+1)/2 + (q^2+1)/2
};

/// Upper bounds on the pseudoachromatic index. For n = 2 both fields hold
/// the exact planar value floor((q+1)^2/2). Throws for n < 2.
PsiUpper psi_upper(int n, std::uint64_t q);

struct LowerBounds {
  int n = 0;
  std::uint64_t q = 0;
  /// Best lower bound on psi' known from the constructions.
  std::optional<BigInt> psi;
  /// Lower bound on alpha'.
  std::optional<BigInt> alpha;
  /// The general parity-based pseudoachromatic bound (even: spread pairing,
  /// odd: good partition), before any dimension-specific improvement.
  std::optional<BigInt> psi_general;
  std::optional<int> epsilon;  // (q^{n/2} + 1) mod 3 for even n >= 4
  bool exact = false;          // n = 2: psi and alpha are exact values
};

LowerBounds lower_bounds(int n, std::uint64_t q);

struct BoundsRow {
  int n = 0;
  std::uint64_t q = 0;
  BigInt v;
  BigInt lines;
  BigInt chromatic;
  std::optional<BigInt> psi_lower;
  std::optional<BigInt> alpha_lower;
  BigInt psi_upper_exact;
  BigInt psi_upper_simplified;
  std::optional<BigInt> plane_exact_psi;
  std::optional<BigInt> plane_exact_alpha;

  /// Every lower bound is at most psi_upper_exact, and for n >= 3
  /// psi_upper_exact <= psi_upper_simplified.
  bool consistent() const;
};

/// Throws std::invalid_argument when q is not a prime power or n < 2.
BoundsRow bounds_row(int n, std::uint64_t q);
/// Rows ordered by q, then n.
std::vector<BoundsRow> bounds_table(const std::vector<int>& ns, const std::vector<std::uint64_t>& qs);

std::string bounds_csv_header();
std::string bounds_csv_line(const BoundsRow& row);

}  // namespace agcolor

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cubedist/slp.hpp"

namespace cubedist {

// Non-negative integer that is either stored exactly or as base^exponent + addend,
// where the exponent is itself a TowerInt. Used for witness lengths such as 9^(9^9)
// that cannot be materialized.
class TowerInt {
 public:
  // Exact values with more decimal digits than this are kept symbolic.
  static constexpr std::size_t kExactDigitBudget = 20000;
  // Nesting depth beyond which construction throws TowerOverflow.
  static constexpr int kMaxHeight = 64;

  TowerInt() = default;
  TowerInt(const BigInt& v);  // NOLINT(google-explicit-constructor)
  TowerInt(long long v) : TowerInt(BigInt(v)) {}  // NOLINT(google-explicit-constructor)

  static TowerInt pow(unsigned base, const TowerInt& exponent);

  bool is_exact() const { return exact_ != nullptr; }
  const BigInt& exact() const;  // throws TowerOverflow when symbolic
  bool symbolic() const { return exponent_ != nullptr; }
  unsigned base() const { return base_; }
  const TowerInt& exponent() const { return *exponent_; }
  const BigInt& addend() const { return addend_; }

  // Number of nested exponentials in the symbolic form (0 for plain integers).
  int height() const;

  TowerInt operator+(const BigInt& c) const;
  // Multiplication by a small factor; exact, or exponent+1 when factor == base.
  TowerInt times(unsigned factor) const;

  // Natural log applied k times; +inf when it does not fit a double.
  double iterated_log(int k) const;

  // Decimal for exact values up to max_digits, otherwise `b^{E}` with optional `+c`.
  std::string str(std::size_t max_digits = 80) const;
  static TowerInt parse(std::string_view text);

  friend bool operator<(const TowerInt& a, const TowerInt& b);
  friend bool operator==(const TowerInt& a, const TowerInt& b);
  friend bool operator>(const TowerInt& a, const TowerInt& b) { return b < a; }
  friend bool operator<=(const TowerInt& a, const TowerInt& b) { return !(b < a); }

 private:
  std::shared_ptr<const BigInt> exact_ = std::make_shared<const BigInt>(0);
  unsigned base_ = 0;
  std::shared_ptr<const TowerInt> exponent_;
  BigInt addend_;
};

// ln of an exact non-negative integer as a double (may be +inf only for absurd sizes).
double big_log(const BigInt& v);

// exp applied k times to x, as a TowerInt-free double (inf on overflow).
double exp_iter(int k, double x);

}  // namespace cubedist

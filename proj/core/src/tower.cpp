#include "cubedist/tower.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "cubedist/error.hpp"

namespace cubedist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double apply_logs(double v, int times) {
  for (int i = 0; i < times; ++i) {
    if (v <= 0) return -kInf;
    v = std::log(v);
  }
  return v;
}

}  // namespace

double big_log(const BigInt& v) {
  if (v <= 0) return -kInf;
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log(static_cast<double>(v));
  std::size_t shift = bits - 53;
  BigInt top = v >> shift;
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

double exp_iter(int k, double x) {
  for (int i = 0; i < k; ++i) {
    if (x > 709.0) return kInf;
    x = std::exp(x);
  }
  return x;
}

TowerInt::TowerInt(const BigInt& v) : exact_(std::make_shared<const BigInt>(v)) {
  if (v < 0) throw Error(ErrorKind::InvalidParam, "TowerInt must be non-negative");
}

TowerInt TowerInt::pow(unsigned base, const TowerInt& exponent) {
  if (base < 2) throw Error(ErrorKind::InvalidParam, "tower base must be at least 2");
  if (exponent.height() + 1 > kMaxHeight)
    throw Error(ErrorKind::TowerOverflow, "tower height exceeds " + std::to_string(kMaxHeight));
  TowerInt r;
  r.exact_.reset();
  r.base_ = base;
  r.exponent_ = std::make_shared<const TowerInt>(exponent);
  if (exponent.is_exact()) {
    const BigInt& e = exponent.exact();
    double digits = static_cast<double>(e) * std::log10(static_cast<double>(base));
    if (digits <= static_cast<double>(kExactDigitBudget))
      r.exact_ = std::make_shared<const BigInt>(
          boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)));
  }
  return r;
}

const BigInt& TowerInt::exact() const {
  if (!exact_) throw Error(ErrorKind::TowerOverflow, "value " + str() + " is only known symbolically");
  return *exact_;
}

int TowerInt::height() const { return exponent_ ? 1 + exponent_->height() : 0; }

TowerInt TowerInt::operator+(const BigInt& c) const {
  TowerInt r = *this;
  if (exact_) {
    BigInt v = *exact_ + c;
    if (v < 0) throw Error(ErrorKind::InvalidParam, "TowerInt must be non-negative");
    r.exact_ = std::make_shared<const BigInt>(std::move(v));
  }
  if (exponent_) r.addend_ += c;
  return r;
}

TowerInt TowerInt::times(unsigned factor) const {
  if (exponent_ && factor == base_) {
    TowerInt r = pow(base_, *exponent_ + 1);
    r.addend_ = addend_ * factor;
    if (exact_) r.exact_ = std::make_shared<const BigInt>(*exact_ * factor);
    return r;
  }
  if (exact_) return TowerInt(*exact_ * factor);
  throw Error(ErrorKind::TowerOverflow, "cannot scale symbolic " + str() + " by " + std::to_string(factor));
}

double TowerInt::iterated_log(int k) const {
  if (exact_) {
    if (k == 0) return static_cast<double>(*exact_);
    return apply_logs(big_log(*exact_), k - 1);
  }
  double lnb = std::log(static_cast<double>(base_));
  if (k == 0) return kInf;
  if (k == 1) {
    double e = exponent_->iterated_log(0);
    return std::isinf(e) ? kInf : e * lnb;
  }
  double le = exponent_->iterated_log(1);
  if (std::isinf(le)) return exponent_->iterated_log(k - 1);
  return apply_logs(le + std::log(lnb), k - 2);
}

std::string TowerInt::str(std::size_t max_digits) const {
  if (exact_) {
    std::string s = exact_->str();
    if (!exponent_ || s.size() <= max_digits) return s;
  }
  std::string s = std::to_string(base_) + "^{" + exponent_->str(max_digits) + "}";
  if (addend_ > 0) s += "+" + addend_.str();
  if (addend_ < 0) s += addend_.str();
  return s;
}

namespace {

struct Parser {
  std::string_view t;
  std::size_t i = 0;

  void skip() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < t.size() && t[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  BigInt number() {
    skip();
    bool negative = false;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) negative = t[i++] == '-';
    std::size_t s = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (s == i) throw Error(ErrorKind::Parse, "expected digits in '" + std::string(t) + "'");
    BigInt v(std::string(t.substr(s, i - s)));
    return negative ? BigInt(-v) : v;
  }
  TowerInt expr() {
    BigInt head = number();
    if (!eat('^')) return TowerInt(head);
    TowerInt e;
    if (eat('{')) {
      e = expr();
      if (!eat('}')) throw Error(ErrorKind::Parse, "missing '}' in '" + std::string(t) + "'");
    } else {
      e = TowerInt(number());
    }
    TowerInt r = TowerInt::pow(static_cast<unsigned>(head), e);
    skip();
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) r = r + number();
    return r;
  }
};

}  // namespace

TowerInt TowerInt::parse(std::string_view text) {
  Parser p{text};
  TowerInt r = p.expr();
  p.skip();
  if (p.i != text.size()) throw Error(ErrorKind::Parse, "trailing input in '" + std::string(text) + "'");
  return r;
}

bool operator==(const TowerInt& a, const TowerInt& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  if (a.exponent_ && b.exponent_)
    return a.base_ == b.base_ && *a.exponent_ == *b.exponent_ && a.addend_ == b.addend_;
  return false;
}

bool operator<(const TowerInt& a, const TowerInt& b) {
  if (a.exact_ && b.exact_) return *a.exact_ < *b.exact_;
  if (a.exponent_ && b.exponent_ && a.base_ == b.base_) {
    if (*a.exponent_ == *b.exponent_) return a.addend_ < b.addend_;
    return *a.exponent_ < *b.exponent_;
  }
  for (int k = 0; k <= TowerInt::kMaxHeight + 1; ++k) {
    double x = a.iterated_log(k), y = b.iterated_log(k);
    if (std::isinf(x) && std::isinf(y)) continue;
    return x < y;
  }
  return false;
}

}  // namespace cubedist

#include "stackprice/exact.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "stackprice/error.hpp"

namespace stackprice {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactNumber::ExactNumber(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactNumber::ExactNumber(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactNumber ExactNumber::infinity() {
  ExactNumber x;
  x.infinite_ = true;
  return x;
}

ExactNumber ExactNumber::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf" || s == "+inf" || s == "infinity") return infinity();

  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&]() -> ParseError {
    return ParseError("invalid number literal \"" + std::string(text) + "\"");
  };

  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) throw fail();
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(digits, 10), den);
  } else {
    if (!all_digits(body)) throw fail();
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return ExactNumber(q);
}

const mpq_class& ExactNumber::rational() const {
  if (infinite_) throw ArithmeticError("infinite value has no rational representation");
  return value_;
}

std::string ExactNumber::str() const {
  if (infinite_) return "inf";
  return value_.get_str();
}

std::string ExactNumber::decimal(int digits) const {
  if (infinite_) return "inf";
  mpf_class f(value_, 256);
  std::vector<char> buf(128);
  std::string fmt = "%." + std::to_string(digits) + "Fg";
  int n = gmp_snprintf(buf.data(), buf.size(), fmt.c_str(), f.get_mpf_t());
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    gmp_snprintf(buf.data(), buf.size(), fmt.c_str(), f.get_mpf_t());
  }
  return std::string(buf.data());
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& rhs) {
  if (rhs.infinite_) throw ArithmeticError("subtraction of infinity");
  if (infinite_) return *this;
  value_ -= rhs.value_;
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& rhs) {
  if (infinite_ || rhs.infinite_) {
    const ExactNumber& other = infinite_ ? rhs : *this;
    if (other.infinite_) return *this;  // inf * inf
    if (other.sign() == 0) throw ArithmeticError("infinity times zero");
    if (other.sign() < 0) throw ArithmeticError("infinity times a negative value");
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ *= rhs.value_;
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& rhs) {
  if (rhs.infinite_) {
    if (infinite_) throw ArithmeticError("infinity divided by infinity");
    value_ = 0;
    return *this;
  }
  if (rhs.sign() == 0) throw ArithmeticError("division by zero");
  if (infinite_) {
    if (rhs.sign() < 0) throw ArithmeticError("infinity divided by a negative value");
    return *this;
  }
  value_ /= rhs.value_;
  return *this;
}

ExactNumber ExactNumber::operator-() const {
  if (infinite_) throw ArithmeticError("negation of infinity");
  return ExactNumber(mpq_class(-value_));
}

bool operator==(const ExactNumber& a, const ExactNumber& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.str(); }

ExactNumber pow(const ExactNumber& base, int exponent) {
  const mpq_class& b = base.rational();
  if (sgn(b) == 0) {
    if (exponent <= 0) throw ArithmeticError("zero to a non-positive power");
    return ExactNumber(0);
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-static_cast<long>(exponent))
                                 : static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  if (exponent < 0) std::swap(num, den);
  return ExactNumber(mpq_class(num, den));
}

ExactNumber harmonic(int n) {
  mpq_class h = 0;
  for (int j = 1; j <= n; ++j) h += mpq_class(1, j);
  h.canonicalize();
  return ExactNumber(h);
}

ExactNumber min(const ExactNumber& a, const ExactNumber& b) { return b < a ? b : a; }
ExactNumber max(const ExactNumber& a, const ExactNumber& b) { return a < b ? b : a; }

mpz_class lcm_denominator(const mpz_class& acc, const ExactNumber& x) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), x.rational().get_den_mpz_t());
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace stackprice

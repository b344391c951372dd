#include "icx/rational.hpp"

#include <cctype>
#include <ostream>

#include "icx/error.hpp"

namespace icx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::EmptyDomain: return "empty effective domain";
    case ErrorKind::Unsupported: return "unsupported scale";
    case ErrorKind::IterationLimit: return "iteration limit exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorKind::Parse, "malformed number '" + std::string(whole) + "'");
  BigInt z(std::string(s), 10);
  return neg ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(ErrorKind::Parse, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) fail(ErrorKind::Parse, "malformed denominator in '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool neg = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      neg = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      fail(ErrorKind::Parse, "malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(neg ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text, text));
}

std::string render(const Rational& q) { return q.get_str(10); }

std::string render_decimal(const Rational& q, int max_digits) {
  BigInt num = q.get_num();
  const BigInt den = q.get_den();
  std::string sign = num < 0 ? "-" : "";
  num = abs(num);
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = sign + whole.get_str();
  if (rem == 0) return out;
  out += '.';
  for (int k = 0; k < max_digits && rem != 0; ++k) {
    rem *= 10;
    BigInt digit = rem / den;
    rem %= den;
    out += digit.get_str();
  }
  return out;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ExtValue::ExtValue(Rational v) : value_(std::move(v)) { value_.canonicalize(); }

const Rational& ExtValue::value() const {
  if (infinite_) fail(ErrorKind::Precondition, "value() called on +inf");
  return value_;
}

ExtValue& ExtValue::operator+=(const ExtValue& rhs) {
  if (infinite_ || rhs.infinite_) {
    *this = infinity();
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

ExtValue ExtValue::scaled(const Rational& factor) const {
  if (factor < 0) fail(ErrorKind::Precondition, "ExtValue scaled by a negative factor");
  if (infinite_) {
    if (factor == 0) fail(ErrorKind::Precondition, "+inf * 0 is undefined");
    return infinity();
  }
  return ExtValue(Rational(value_ * factor));
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtValue::str() const { return infinite_ ? "+inf" : render(value_); }

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return infinity();
  return ExtValue(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.str(); }

}  // namespace icx

#include "invtqft/scalar.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "invtqft/error.hpp"

namespace invtqft::tqft {

using abelian::Integer;

namespace {

mpq_class frac_part(const mpq_class& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  mpq_class r = q - mpq_class(fl);
  r.canonicalize();
  return r;
}

long double log_of(const Integer& n) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, n.get_mpz_t());
  return std::log(static_cast<long double>(d)) + static_cast<long double>(e) * std::log(2.0L);
}

std::optional<std::map<Integer, long>> factor_integer(Integer n) {
  std::map<Integer, long> out;
  if (n <= 0) return std::nullopt;
  constexpr unsigned long kTrialLimit = 1000000;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (n == 1) return out;
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++out[Integer(p)];
    }
  }
  if (n == 1) return out;
  if (n < Integer(kTrialLimit) * kTrialLimit || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return out;
  }
  return std::nullopt;
}

std::string fraction(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::optional<std::map<Integer, mpq_class>> factor_rational(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  if (r <= 0) return std::nullopt;
  auto num = factor_integer(r.get_num());
  auto den = factor_integer(r.get_den());
  if (!num || !den) return std::nullopt;
  std::map<Integer, mpq_class> out;
  for (const auto& [p, e] : *num) out[p] += e;
  for (const auto& [p, e] : *den) out[p] -= e;
  return out;
}

void Scalar::set_phase(mpq_class p) { phase_ = frac_part(p); }

Scalar Scalar::rational(const mpq_class& r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "scalars must be nonzero");
  Scalar s;
  mpq_class a = abs(r);
  if (auto f = factor_rational(a)) {
    s.primes_ = std::move(*f);
  } else {
    s.exact_ = false;
    s.log_mag_ = log_of(a.get_num()) - log_of(a.get_den());
  }
  if (r < 0) s.phase_ = mpq_class(1, 2);
  return s;
}

Scalar Scalar::real(long double x) {
  if (x == 0 || !std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "scalars must be finite and nonzero");
  Scalar s;
  s.exact_ = false;
  s.log_mag_ = std::log(std::fabs(x));
  if (x < 0) s.phase_ = mpq_class(1, 2);
  return s;
}

Scalar Scalar::root_of_unity(const mpq_class& turns) {
  Scalar s;
  s.set_phase(turns);
  return s;
}

Scalar Scalar::polar(const Scalar& magnitude, const mpq_class& turns) {
  Scalar s = magnitude;
  s.set_phase(turns);
  return s;
}

Scalar Scalar::magnitude() const { return polar(*this, 0); }

Scalar Scalar::pow(const mpq_class& e) const {
  Scalar s;
  s.exact_ = exact_;
  if (exact_) {
    for (const auto& [p, x] : primes_) {
      mpq_class y = x * e;
      y.canonicalize();
      if (y != 0) s.primes_[p] = y;
    }
  } else {
    s.log_mag_ = log_mag_ * static_cast<long double>(e.get_d());
  }
  s.set_phase(phase_ * e);
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  if (a.exact_ && b.exact_) {
    s.primes_ = a.primes_;
    for (const auto& [p, x] : b.primes_) {
      mpq_class y = s.primes_[p] + x;
      if (y == 0) s.primes_.erase(p);
      else s.primes_[p] = y;
    }
  } else {
    s.exact_ = false;
    s.log_mag_ = a.log_magnitude() + b.log_magnitude();
  }
  s.set_phase(a.phase_ + b.phase_);
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.phase_ != b.phase_) return false;
  if (a.exact_ && b.exact_) return a.primes_ == b.primes_;
  return std::fabs(a.log_magnitude() - b.log_magnitude()) <= 1e-9L;
}

long double Scalar::log_magnitude() const {
  if (!exact_) return log_mag_;
  long double l = 0;
  for (const auto& [p, e] : primes_) l += log_of(p) * static_cast<long double>(e.get_d());
  return l;
}

long double Scalar::magnitude_value() const { return std::exp(log_magnitude()); }

std::optional<mpq_class> Scalar::rational_magnitude() const {
  if (!exact_) return std::nullopt;
  mpq_class r = 1;
  for (const auto& [p, e] : primes_) {
    if (e.get_den() != 1) return std::nullopt;
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), Integer(abs(e.get_num())).get_ui());
    if (e > 0) r *= pe;
    else r /= pe;
  }
  r.canonicalize();
  return r;
}

bool Scalar::magnitude_is_one() const {
  if (exact_) return primes_.empty();
  return std::fabs(log_mag_) <= 1e-9L;
}

std::string Scalar::to_string(int digits) const {
  if (!exact_) return approx_string(digits);
  mpq_class rational = 1;
  std::string radicals;
  for (const auto& [p, e] : primes_) {
    if (e.get_den() != 1) {
      if (!radicals.empty()) radicals += "*";
      radicals += p.get_str() + "^(" + fraction(e) + ")";
      continue;
    }
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), Integer(abs(e.get_num())).get_ui());
    if (e > 0) rational *= pe;
    else rational /= pe;
  }
  rational.canonicalize();
  std::string mag;
  if (radicals.empty()) mag = fraction(rational);
  else if (rational == 1) mag = radicals;
  else mag = fraction(rational) + "*" + radicals;
  if (phase_ == 0) return mag;
  if (phase_ == mpq_class(1, 2)) return "-" + mag;
  if (mag == "1") return "e(" + fraction(phase_) + ")";
  return mag + "*e(" + fraction(phase_) + ")";
}

std::string Scalar::approx_string(int digits) const {
  std::ostringstream os;
  const long double l10 = log_magnitude() / std::log(10.0L);
  if (std::fabs(l10) < 4000) {
    os << std::setprecision(digits) << magnitude_value();
  } else {
    long double ex = std::floor(l10);
    os << std::setprecision(digits) << std::pow(10.0L, l10 - ex) << "e" << static_cast<long long>(ex);
  }
  std::string mag = os.str();
  if (phase_ == 0) return mag;
  if (phase_ == mpq_class(1, 2)) return "-" + mag;
  return mag + "*e(" + fraction(phase_) + ")";
}

// ---------------------------------------------------------------- parsing

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view t) : t_(t) {}

  Scalar parse() {
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    Scalar s = factor();
    while ((skip(), peek() == '*')) {
      ++pos_;
      s = s * factor();
    }
    skip();
    if (pos_ != t_.size()) fail("unexpected character");
    return negative ? -s : s;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, pos_); }
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    return std::string(t_.substr(start, pos_ - start));
  }

  // integer, fraction a/b or decimal with optional exponent, optionally signed
  mpq_class number(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) neg = t_[pos_++] == '-';
    std::string whole = digits();
    std::string frac;
    if (peek() == '.') {
      ++pos_;
      frac = digits();
    }
    if (whole.empty() && frac.empty()) {
      pos_ = start;
      fail("expected a number");
    }
    mpq_class q(Integer((whole.empty() ? "0" : whole) + frac), 1);
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, frac.size());
    q /= ten_pow;
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < t_.size() &&
        (std::isdigit(static_cast<unsigned char>(t_[pos_ + 1])) || t_[pos_ + 1] == '-' ||
         t_[pos_ + 1] == '+')) {
      ++pos_;
      bool eneg = false;
      if (peek() == '-' || peek() == '+') eneg = t_[pos_++] == '-';
      std::string ex = digits();
      if (ex.empty() || ex.size() > 6) fail("bad exponent");
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, std::stoul(ex));
      if (eneg) q /= p;
      else q *= p;
    } else if (frac.empty() && peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      Integer d(den);
      if (d == 0) fail("zero denominator");
      q /= d;
    }
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }

  Scalar factor() {
    skip();
    if (peek() == 'e' && pos_ + 1 < t_.size() && t_[pos_ + 1] == '(') {
      pos_ += 2;
      mpq_class turns = number(true);
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return Scalar::root_of_unity(turns);
    }
    std::size_t start = pos_;
    mpq_class base = number(false);
    if (base == 0) {
      pos_ = start;
      fail("scalars must be nonzero");
    }
    Scalar s = Scalar::rational(base);
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      mpq_class e;
      if (peek() == '(') {
        ++pos_;
        e = number(true);
        skip();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        e = number(true);
      }
      s = s.pow(e);
    }
    return s;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace invtqft::tqft

#include "invtqft/manifolds.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "invtqft/error.hpp"

namespace invtqft::manifolds {

namespace {

struct GeneratorInfo {
  Generator g;
  std::string_view name;
  long chi;
  long sigma;
  Generator reverse;
};

// Longer names first so that prefix matching picks CP2bar over CP2.
constexpr std::array<GeneratorInfo, 7> kGenerators{{
    {Generator::CP2bar, "CP2bar", 3, -1, Generator::CP2},
    {Generator::K3bar, "K3bar", 24, 16, Generator::K3},
    {Generator::S2xS2, "S2xS2", 4, 0, Generator::S2xS2},
    {Generator::CP2, "CP2", 3, 1, Generator::CP2bar},
    {Generator::K3, "K3", 24, -16, Generator::K3bar},
    {Generator::S4, "S4", 2, 0, Generator::S4},
    {Generator::T4, "T4", 0, 0, Generator::T4},
}};

const GeneratorInfo& info(Generator g) {
  for (const auto& i : kGenerators)
    if (i.g == g) return i;
  throw Error(ErrorKind::InvalidArgument, "unknown generator");
}

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::MalformedExpression, "manifold invariants overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::MalformedExpression, "manifold invariants overflow");
  return r;
}

bool by_name(const Manifold4& a, const Manifold4& b) { return a.to_string() < b.to_string(); }

}  // namespace

std::string_view to_string(Generator g) { return info(g).name; }

std::pair<long, long> invariants(Generator g) {
  const auto& i = info(g);
  return {i.chi, i.sigma};
}

Generator reverse(Generator g) { return info(g).reverse; }

const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> all{Generator::S4, Generator::CP2,   Generator::CP2bar,
                                          Generator::S2xS2, Generator::K3, Generator::K3bar,
                                          Generator::T4};
  return all;
}

Manifold4::Manifold4(Generator g) : kind_(Kind::Generator), generator_(g) {
  std::tie(chi_, sigma_) = invariants(g);
}

Manifold4::Manifold4(Kind kind, std::vector<Manifold4> parts) : kind_(kind) {
  // flatten nested operations of the same kind
  for (auto& p : parts) {
    if (p.kind_ == kind) {
      for (auto& q : p.parts_) parts_.push_back(std::move(q));
    } else {
      parts_.push_back(std::move(p));
    }
  }
  std::sort(parts_.begin(), parts_.end(), by_name);
  for (const auto& p : parts_) {
    chi_ = checked_add(chi_, p.chi_);
    sigma_ = checked_add(sigma_, p.sigma_);
  }
  if (kind == Kind::ConnectedSum)
    chi_ = checked_add(chi_, -2 * (static_cast<long>(parts_.size()) - 1));
}

Manifold4 Manifold4::connected_sum(std::vector<Manifold4> parts) {
  if (parts.empty()) throw Error(ErrorKind::MalformedExpression, "empty connected sum");
  for (const auto& p : parts)
    if (!p.connected())
      throw Error(ErrorKind::MalformedExpression,
                  "connected sum with a disconnected manifold: " + p.to_string());
  if (parts.size() == 1) return std::move(parts.front());
  return Manifold4(Kind::ConnectedSum, std::move(parts));
}

Manifold4 Manifold4::disjoint_union(std::vector<Manifold4> parts) {
  if (parts.empty()) throw Error(ErrorKind::MalformedExpression, "empty disjoint union");
  if (parts.size() == 1) return std::move(parts.front());
  return Manifold4(Kind::DisjointUnion, std::move(parts));
}

Manifold4 Manifold4::connected_power(const Manifold4& m, long n) {
  if (n < 1) throw Error(ErrorKind::MalformedExpression, "n-fold connected sum needs n >= 1");
  if (!m.connected())
    throw Error(ErrorKind::MalformedExpression,
                "connected sum with a disconnected manifold: " + m.to_string());
  if (n == 1) return m;
  if (n > 100000) {
    // keep the tree small; invariants are all that matter for huge powers
    throw Error(ErrorKind::MalformedExpression, "connected power too large");
  }
  checked_mul(m.chi_, n);
  checked_mul(m.sigma_, n);
  return connected_sum(std::vector<Manifold4>(static_cast<std::size_t>(n), m));
}

Manifold4 Manifold4::reversed() const {
  switch (kind_) {
    case Kind::Generator: return Manifold4(reverse(generator_));
    case Kind::ConnectedSum:
    case Kind::DisjointUnion: {
      std::vector<Manifold4> ps;
      ps.reserve(parts_.size());
      for (const auto& p : parts_) ps.push_back(p.reversed());
      return Manifold4(kind_, std::move(ps));
    }
  }
  return *this;
}

std::string Manifold4::to_string() const {
  if (kind_ == Kind::Generator) return std::string(manifolds::to_string(generator_));
  std::string sep = kind_ == Kind::ConnectedSum ? " # " : " + ";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += sep;
    out += parts_[i].to_string();
  }
  return out;
}

ChiSigma chi_sigma(const Manifold4& m) { return {m.chi(), m.sigma()}; }

SkkClass skk_class(const Manifold4& m) {
  long chi = m.chi(), sigma = m.sigma();
  if ((chi - sigma) % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "chi and sigma differ mod 2 for " + m.to_string());
  return {chi, sigma, (sigma - chi) / 2};
}

Surface::Surface(std::vector<long> genera) : genera_(std::move(genera)) {
  std::sort(genera_.begin(), genera_.end());
  for (long g : genera_) {
    if (g < 0) throw Error(ErrorKind::MalformedExpression, "negative genus");
    chi_ = checked_add(chi_, checked_add(2, checked_mul(-2, g)));
  }
}

Surface operator+(const Surface& a, const Surface& b) {
  std::vector<long> gs = a.genera_;
  gs.insert(gs.end(), b.genera_.begin(), b.genera_.end());
  return Surface(std::move(gs));
}

std::string Surface::to_string() const {
  if (genera_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < genera_.size(); ++i) {
    if (i) out += " + ";
    out += "Sigma(" + std::to_string(genera_[i]) + ")";
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Manifold4 manifold() {
    Manifold4 m = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return m;
  }

  Surface surface() {
    std::vector<long> genera;
    do {
      skip_ws();
      expect_word("Sigma");
      expect('(');
      genera.push_back(number());
      expect(')');
    } while (accept('+'));
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return Surface(std::move(genera));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected " + std::string(w));
    pos_ += w.size();
  }

  long number() {
    skip_ws();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (__builtin_mul_overflow(v, 10L, &v) || __builtin_add_overflow(v, text_[pos_] - '0', &v)) {
        pos_ = start;
        fail("number too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  Manifold4 sum() {
    std::vector<Manifold4> parts{connected()};
    while (accept('+')) parts.push_back(connected());
    return Manifold4::disjoint_union(std::move(parts));
  }

  Manifold4 connected() {
    std::size_t start = (skip_ws(), pos_);
    std::vector<Manifold4> parts{unary()};
    while (accept('#')) parts.push_back(unary());
    if (parts.size() == 1) return std::move(parts.front());
    for (const auto& p : parts)
      if (!p.connected()) {
        pos_ = start;
        fail("connected sum with a disconnected manifold");
      }
    return Manifold4::connected_sum(std::move(parts));
  }

  Manifold4 unary() {
    skip_ws();
    if (accept('-')) return unary().reversed();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      long n = number();
      expect('*');
      Manifold4 m = unary();
      if (n < 1) {
        pos_ = start;
        fail("n-fold connected sum needs n >= 1");
      }
      if (!m.connected()) {
        pos_ = start;
        fail("connected sum with a disconnected manifold");
      }
      try {
        return Manifold4::connected_power(m, n);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    return atom();
  }

  Manifold4 atom() {
    skip_ws();
    if (accept('(')) {
      Manifold4 m = sum();
      expect(')');
      return m;
    }
    for (const auto& g : kGenerators) {
      if (text_.substr(pos_, g.name.size()) == g.name) {
        std::size_t end = pos_ + g.name.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
        pos_ = end;
        return Manifold4(g.g);
      }
    }
    fail(pos_ == text_.size() ? "unexpected end of input" : "expected a generator or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool starts_with_sigma(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return text.substr(i, 5) == "Sigma";
}

}  // namespace

Manifold4 parse_manifold4(std::string_view text) { return Parser(text).manifold(); }

Surface parse_surface(std::string_view text) { return Parser(text).surface(); }

std::variant<Manifold4, Surface> parse_manifold(std::string_view text) {
  if (starts_with_sigma(text)) return parse_surface(text);
  return parse_manifold4(text);
}

}  // namespace invtqft::manifolds

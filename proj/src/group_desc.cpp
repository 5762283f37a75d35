#include "invtqft/group_desc.hpp"

#include <algorithm>
#include <cctype>

#include "invtqft/error.hpp"

namespace invtqft {

using abelian::FgAbGroup;
using abelian::Integer;

GroupDesc GroupDesc::circle(std::size_t copies) {
  GroupDesc g;
  g.circles_ = copies;
  return g;
}

GroupDesc GroupDesc::witt(std::size_t copies) {
  GroupDesc g;
  g.witts_ = copies;
  return g;
}

GroupDesc GroupDesc::countable_sum(FgAbGroup summand) {
  GroupDesc g;
  if (!summand.is_trivial()) g.countable_.push_back(std::move(summand));
  return g;
}

GroupDesc GroupDesc::from(const abelian::CharacterDescription& chars) {
  GroupDesc g(chars.finite_part);
  g.circles_ = chars.circle_factors;
  return g;
}

GroupDesc GroupDesc::from(const abelian::CoefficientGroup& coeff) {
  if (const auto* fg = std::get_if<FgAbGroup>(&coeff)) return GroupDesc(*fg);
  return circle();
}

GroupDesc GroupDesc::from(const abelian::HomValue& value) {
  if (const auto* fg = std::get_if<FgAbGroup>(&value)) return GroupDesc(*fg);
  return from(std::get<abelian::CharacterDescription>(value));
}

bool GroupDesc::is_trivial() const noexcept {
  return fg_.is_trivial() && circles_ == 0 && witts_ == 0 && countable_.empty();
}

bool GroupDesc::is_finitely_generated() const noexcept {
  return circles_ == 0 && witts_ == 0 && countable_.empty();
}

bool GroupDesc::is_circle() const noexcept {
  return fg_.is_trivial() && circles_ == 1 && witts_ == 0 && countable_.empty();
}

bool GroupDesc::is_witt() const noexcept {
  return fg_.is_trivial() && circles_ == 0 && witts_ == 1 && countable_.empty();
}

std::optional<FgAbGroup> GroupDesc::as_fg() const {
  if (!is_finitely_generated()) return std::nullopt;
  return fg_;
}

std::optional<abelian::CoefficientGroup> GroupDesc::as_coefficients() const {
  if (is_finitely_generated()) return abelian::CoefficientGroup(fg_);
  if (is_circle()) return abelian::CoefficientGroup(abelian::CircleDual{});
  return std::nullopt;
}

std::optional<Integer> GroupDesc::finite_order() const {
  if (!is_finitely_generated()) return std::nullopt;
  return fg_.order();
}

std::vector<std::string> GroupDesc::factors() const {
  std::vector<std::string> out;
  if (!fg_.is_trivial()) out.push_back(fg_.to_string());
  for (std::size_t i = 0; i < circles_; ++i) out.emplace_back("Cx");
  for (std::size_t i = 0; i < witts_; ++i) out.emplace_back("W");
  for (const auto& s : countable_) out.push_back("sum_N(" + s.to_string() + ")");
  return out;
}

std::string GroupDesc::to_string() const {
  const auto parts = factors();
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "+" + parts[i];
  return s;
}

GroupDesc direct_sum(const GroupDesc& a, const GroupDesc& b) {
  GroupDesc g(abelian::direct_sum(a.fg_, b.fg_));
  g.circles_ = a.circles_ + b.circles_;
  g.witts_ = a.witts_ + b.witts_;
  g.countable_ = a.countable_;
  g.countable_.insert(g.countable_.end(), b.countable_.begin(), b.countable_.end());
  std::sort(g.countable_.begin(), g.countable_.end());
  return g;
}

// ---------------------------------------------------------------- parser

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  GroupDesc parse() {
    GroupDesc g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  GroupDesc expr() {
    GroupDesc g = term();
    while (true) {
      skip_space();
      if (peek() != '+') break;
      ++pos_;
      g = direct_sum(g, term());
    }
    return g;
  }

  GroupDesc term() {
    GroupDesc base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    const Integer n = number();
    if (n > 4096) fail("exponent too large");
    GroupDesc g;
    for (unsigned long i = 0; i < n.get_ui(); ++i) g = direct_sum(g, base);
    return g;
  }

  GroupDesc atom() {
    skip_space();
    if (consume("sum_N")) {
      expect('(');
      GroupDesc inner = expr();
      expect(')');
      const auto fg = inner.as_fg();
      if (!fg) fail("sum_N(...) needs a finitely generated summand");
      return GroupDesc::countable_sum(*fg);
    }
    if (consume("Cx")) return GroupDesc::circle();
    if (peek() == 'W') {
      ++pos_;
      return GroupDesc::witt();
    }
    if (peek() == '0') {
      ++pos_;
      return GroupDesc();
    }
    if (peek() == 'Z') {
      ++pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        const Integer n = number();
        if (n < 1) fail("cyclic order must be positive");
        return GroupDesc(FgAbGroup::cyclic(n));
      }
      return GroupDesc(FgAbGroup::free(1));
    }
    if (peek() == '(') {
      ++pos_;
      GroupDesc g = expr();
      expect(')');
      return g;
    }
    fail("expected a group term");
  }

  Integer number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupDesc parse_group(std::string_view text) { return GroupParser(text).parse(); }

FgAbGroup parse_fg_group(std::string_view text) {
  const GroupDesc g = parse_group(text);
  const auto fg = g.as_fg();
  if (!fg) throw ParseError("expected a finitely generated group, got " + g.to_string(), 0);
  return *fg;
}

}  // namespace invtqft

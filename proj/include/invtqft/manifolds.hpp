#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace invtqft::manifolds {

enum class Generator { S4, CP2, CP2bar, S2xS2, K3, K3bar, T4 };

std::string_view to_string(Generator g);
// (chi, sigma) of a generator.
std::pair<long, long> invariants(Generator g);
Generator reverse(Generator g);
const std::vector<Generator>& all_generators();

/// Formal closed oriented 4-manifold: generators combined by connected sum and
/// disjoint union. Orientation reversal is pushed down to the generators and
/// the operands of both operations are flattened and sorted, so equal
/// expressions up to associativity/commutativity compare equal.
class Manifold4 {
 public:
  enum class Kind { Generator, ConnectedSum, DisjointUnion };

  Manifold4() : Manifold4(Generator::S4) {}
  Manifold4(Generator g);  // NOLINT(implicit)

  // Operands must be connected; throws MalformedExpression otherwise.
  static Manifold4 connected_sum(std::vector<Manifold4> parts);
  static Manifold4 disjoint_union(std::vector<Manifold4> parts);
  // n-fold connected sum of m with itself, n >= 1.
  static Manifold4 connected_power(const Manifold4& m, long n);

  Manifold4 reversed() const;

  Kind kind() const noexcept { return kind_; }
  Generator generator() const noexcept { return generator_; }
  const std::vector<Manifold4>& parts() const noexcept { return parts_; }
  bool connected() const noexcept { return kind_ != Kind::DisjointUnion; }
  long chi() const noexcept { return chi_; }
  long sigma() const noexcept { return sigma_; }

  std::string to_string() const;

  friend bool operator==(const Manifold4& a, const Manifold4& b) {
    return a.to_string() == b.to_string();
  }

 private:
  Manifold4(Kind kind, std::vector<Manifold4> parts);

  Kind kind_ = Kind::Generator;
  Generator generator_ = Generator::S4;
  std::vector<Manifold4> parts_;
  long chi_ = 0;
  long sigma_ = 0;
};

struct ChiSigma {
  long chi = 0;
  long sigma = 0;
  friend bool operator==(const ChiSigma&, const ChiSigma&) = default;
};

ChiSigma chi_sigma(const Manifold4& m);

/// Element of SKK_4 as (chi, sigma) together with the projection (sigma - chi)/2.
struct SkkClass {
  long chi = 0;
  long sigma = 0;
  long second_factor = 0;
};

/// Throws ParityViolation if chi and sigma differ mod 2 (never for valid input).
SkkClass skk_class(const Manifold4& m);

/// Closed oriented surface: one genus per connected component.
class Surface {
 public:
  Surface() = default;
  explicit Surface(std::vector<long> genera);  // throws MalformedExpression on g < 0
  static Surface of_genus(long g) { return Surface({g}); }

  const std::vector<long>& genera() const noexcept { return genera_; }
  long chi() const noexcept { return chi_; }
  std::string to_string() const;

  friend Surface operator+(const Surface& a, const Surface& b);
  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  std::vector<long> genera_;  // sorted
  long chi_ = 0;
};

/// Grammar (lowest to highest precedence): `a + b` disjoint union, `a # b`
/// connected sum, prefix `-a` reversal and `n*a` n-fold connected sum;
/// parentheses; generators S4, CP2, CP2bar, S2xS2, K3, K3bar, T4.
/// Throws ParseError with the offending position.
Manifold4 parse_manifold4(std::string_view text);

/// `Sigma(g)` terms joined by `+`.
Surface parse_surface(std::string_view text);

/// Dispatches on the first token: surfaces start with `Sigma`.
std::variant<Manifold4, Surface> parse_manifold(std::string_view text);

}  // namespace invtqft::manifolds

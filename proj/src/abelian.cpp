#include "invtqft/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invtqft/error.hpp"

namespace invtqft::abelian {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, message);
}

// Shared elimination loop; the transform matrices are only touched when
// TrackTransforms is set.
template <bool TrackTransforms>
void reduce_to_smith(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          Integer a = abs_value(s(i, j));
          if (pr == rows || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return;  // remaining block is zero

      if (pr != t) {
        s.swap_rows(t, pr);
        if constexpr (TrackTransforms) u->swap_rows(t, pr);
      }
      if (pc != t) {
        s.swap_cols(t, pc);
        if constexpr (TrackTransforms) v->swap_cols(t, pc);
      }

      bool cleared = true;
      const Integer pivot = s(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / pivot;
        if (q != 0) {
          Integer neg = -q;
          s.add_row_multiple(i, t, neg);
          if constexpr (TrackTransforms) u->add_row_multiple(i, t, neg);
        }
        if (s(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / pivot;
        if (q != 0) {
          Integer neg = -q;
          s.add_col_multiple(j, t, neg);
          if constexpr (TrackTransforms) v->add_col_multiple(j, t, neg);
        }
        if (s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility: fold an offending row into row t and retry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s(i, j) != 0 && mpz_divisible_p(s(i, j).get_mpz_t(), pivot.get_mpz_t()) == 0) {
            s.add_row_multiple(t, i, Integer(1));
            if constexpr (TrackTransforms) u->add_row_multiple(t, i, Integer(1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      if constexpr (TrackTransforms) u->negate_row(t);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
  require(r < rows_ && c < cols_, "matrix index out of range");
  return (*this)(r, c);
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, "matrix index out of range");
  return (*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, "matrix dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Integer determinant(const IntMatrix& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  reduce_to_smith<true>(f.diagonal, &f.left, &f.right);
  return f;
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
  reduce_to_smith<false>(m, nullptr, nullptr);
  std::vector<Integer> d;
  const std::size_t n = std::min(m.rows(), m.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(m(i, i));
  return d;
}

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i] >= 2, "invariant factors must be at least 2");
    if (i + 1 < factors_.size())
      require(mpz_divisible_p(factors_[i + 1].get_mpz_t(), factors_[i].get_mpz_t()) != 0,
              "invariant factors must divide each other in order");
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer& order) {
  require(order >= 0, "cyclic group order must be nonnegative");
  if (order == 0) return free(1);
  if (order == 1) return trivial();
  return FgAbGroup(0, {order});
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders) {
  std::vector<Integer> torsion;
  for (const Integer& o : orders) {
    require(o >= 0, "cyclic group order must be nonnegative");
    if (o == 0)
      ++free_rank;
    else if (o > 1)
      torsion.push_back(o);
  }
  if (torsion.empty()) return free(free_rank);
  FgAbGroup t = cokernel(IntMatrix::diagonal(torsion));
  return FgAbGroup(free_rank, t.factors_);
}

Integer FgAbGroup::generator_order(std::size_t i) const {
  require(i < generator_count(), "generator index out of range");
  return i < free_rank_ ? Integer(0) : factors_[i - free_rank_];
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const Integer& d : factors_) n *= d;
  return n;
}

Integer FgAbGroup::torsion_exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::vector<Integer> FgAbGroup::normalize(std::vector<Integer> element) const {
  require(element.size() == generator_count(), "element has wrong number of coordinates");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Integer& x = element[free_rank_ + i];
    x = mod_nonneg(x, factors_[i]);
  }
  return element;
}

Integer FgAbGroup::element_order(const std::vector<Integer>& element) const {
  const auto e = normalize(element);
  for (std::size_t i = 0; i < free_rank_; ++i)
    if (e[i] != 0) return 0;
  Integer order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Integer& d = factors_[i];
    order = lcm_of(order, Integer(d / gcd_of(e[free_rank_ + i], d)));
  }
  return order;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << '+';
    out << s;
    first = false;
  };
  if (free_rank_ == 1)
    emit("Z");
  else if (free_rank_ > 1)
    emit("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    std::string term = "Z/" + factors_[i].get_str();
    if (j - i > 1) term = "(" + term + ")^" + std::to_string(j - i);
    emit(term);
    i = j;
  }
  return out.str();
}

std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b) {
  if (auto c = a.free_rank_ <=> b.free_rank_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    int c = cmp(a.factors_[i], b.factors_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FgAbGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), orders);
}

FgAbGroup power(const FgAbGroup& a, std::size_t n) {
  FgAbGroup result;
  for (std::size_t i = 0; i < n; ++i) result = direct_sum(result, a);
  return result;
}

FgAbGroup cokernel(const IntMatrix& m) {
  const auto diag = smith_diagonal(m);
  std::size_t free_rank = m.rows() - diag.size();
  std::vector<Integer> factors;
  for (const Integer& d : diag) {
    if (d == 0)
      ++free_rank;
    else if (d != 1)
      factors.push_back(d);
  }
  return FgAbGroup(free_rank, std::move(factors));
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

// ---------------------------------------------------------------- GroupHom

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require(matrix_.rows() == target_.generator_count() &&
              matrix_.cols() == source_.generator_count(),
          "homomorphism matrix has the wrong shape");
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    std::vector<Integer> column(matrix_.rows());
    for (std::size_t i = 0; i < matrix_.rows(); ++i) column[i] = matrix_(i, j);
    column = target_.normalize(column);
    for (std::size_t i = 0; i < matrix_.rows(); ++i) matrix_(i, j) = column[i];
    const Integer d = source_.generator_order(j);
    if (d == 0) continue;
    std::vector<Integer> scaled(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) scaled[i] = d * column[i];
    scaled = target_.normalize(scaled);
    require(std::all_of(scaled.begin(), scaled.end(), [](const Integer& x) { return x == 0; }),
            "homomorphism does not respect the relation of generator " + std::to_string(j));
  }
}

std::vector<Integer> GroupHom::apply(const std::vector<Integer>& element) const {
  require(element.size() == source_.generator_count(), "element has wrong number of coordinates");
  std::vector<Integer> out(target_.generator_count());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < element.size(); ++j) out[i] += matrix_(i, j) * element[j];
  return target_.normalize(out);
}

FgAbGroup GroupHom::image_cokernel() const {
  // Relations: images of source generators plus the target's own relations.
  const std::size_t n = target_.generator_count();
  const std::size_t extra = target_.invariant_factors().size();
  IntMatrix rel(n, matrix_.cols() + extra);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) rel(i, j) = matrix_(i, j);
  for (std::size_t k = 0; k < extra; ++k)
    rel(target_.free_rank() + k, matrix_.cols() + k) = target_.invariant_factors()[k];
  return cokernel(rel);
}

// ---------------------------------------------------------------- functors

std::string CharacterDescription::to_string() const {
  std::string s;
  if (!finite_part.is_trivial()) s = finite_part.to_string();
  for (std::size_t i = 0; i < circle_factors; ++i) s += (s.empty() ? "" : "+") + std::string("Cx");
  return s.empty() ? "0" : s;
}

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank(); ++i)
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  for (const Integer& x : a.invariant_factors())
    for (const Integer& y : b.invariant_factors()) orders.push_back(gcd_of(x, y));
  return FgAbGroup::from_cyclic_orders(a.free_rank() * b.free_rank(), orders);
}

CharacterDescription hom_to_circle(const FgAbGroup& a) {
  return {torsion_part(a), a.free_rank()};
}

HomValue hom_group(const FgAbGroup& a, const CoefficientGroup& b) {
  if (const auto* g = std::get_if<FgAbGroup>(&b)) return hom_group(a, *g);
  return hom_to_circle(a);
}

FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders;
  for (const Integer& x : a.invariant_factors()) {
    for (std::size_t i = 0; i < b.free_rank(); ++i) orders.push_back(x);
    for (const Integer& y : b.invariant_factors()) orders.push_back(gcd_of(x, y));
  }
  return FgAbGroup::from_cyclic_orders(0, orders);
}

FgAbGroup ext_group(const FgAbGroup& a, const CoefficientGroup& b) {
  if (const auto* g = std::get_if<FgAbGroup>(&b)) return ext_group(a, *g);
  return FgAbGroup::trivial();  // C^x is injective
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank(); ++i)
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  for (std::size_t i = 0; i < b.free_rank(); ++i)
    orders.insert(orders.end(), a.invariant_factors().begin(), a.invariant_factors().end());
  for (const Integer& x : a.invariant_factors())
    for (const Integer& y : b.invariant_factors()) orders.push_back(gcd_of(x, y));
  return FgAbGroup::from_cyclic_orders(a.free_rank() * b.free_rank(), orders);
}

FgAbGroup mod_two(const FgAbGroup& a) { return tensor(a, FgAbGroup::cyclic(2)); }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FgAbGroup torsion_part(const FgAbGroup& a, std::optional<unsigned long> prime) {
  if (!prime) return FgAbGroup(0, a.invariant_factors());
  require(is_prime(*prime), "torsion_part expects a prime, got " + std::to_string(*prime));
  std::vector<Integer> orders;
  for (Integer d : a.invariant_factors()) {
    Integer part = 1;
    while (mpz_divisible_ui_p(d.get_mpz_t(), *prime) != 0) {
      d /= *prime;
      part *= *prime;
    }
    orders.push_back(part);
  }
  return FgAbGroup::from_cyclic_orders(0, orders);
}

FgAbGroup killed_by(const FgAbGroup& a, const Integer& m) {
  require(m >= 1, "killed_by expects a positive multiplier");
  std::vector<Integer> orders;
  for (const Integer& d : a.invariant_factors()) orders.push_back(gcd_of(d, m));
  return FgAbGroup::from_cyclic_orders(0, orders);
}

// ---------------------------------------------------------------- extensions

FgAbGroup extension_middle_group(const FgAbGroup& kernel, const FgAbGroup& quotient,
                                 const std::vector<std::vector<Integer>>& cocycle) {
  const std::size_t nk = kernel.generator_count();
  const std::size_t nq = quotient.generator_count();
  const auto& kf = kernel.invariant_factors();
  const auto& qf = quotient.invariant_factors();
  require(cocycle.size() == qf.size(), "one cocycle value per torsion generator of the quotient");

  // Generators: kernel generators, then lifts of the quotient generators.
  IntMatrix rel(nk + nq, kf.size() + qf.size());
  for (std::size_t j = 0; j < kf.size(); ++j) rel(kernel.free_rank() + j, j) = kf[j];
  for (std::size_t i = 0; i < qf.size(); ++i) {
    require(cocycle[i].size() == nk, "cocycle value has wrong number of coordinates");
    const std::size_t col = kf.size() + i;
    rel(nk + quotient.free_rank() + i, col) = qf[i];
    for (std::size_t k = 0; k < nk; ++k) rel(k, col) = -cocycle[i][k];
  }
  return cokernel(rel);
}

std::vector<FgAbGroup> classify_extensions(const FgAbGroup& kernel, const FgAbGroup& quotient) {
  // Ext^1(quotient, kernel) = sum over torsion generators q of kernel / q kernel.
  // Coordinate ranges of representatives, generator by generator.
  const auto& qf = quotient.invariant_factors();
  const std::size_t nk = kernel.generator_count();
  std::vector<std::vector<Integer>> ranges(qf.size(), std::vector<Integer>(nk));
  Integer total = 1;
  for (std::size_t i = 0; i < qf.size(); ++i)
    for (std::size_t k = 0; k < nk; ++k) {
      const Integer d = kernel.generator_order(k);
      ranges[i][k] = d == 0 ? qf[i] : gcd_of(qf[i], d);
      total *= ranges[i][k];
    }
  if (total > kExtensionEnumerationLimit)
    throw Error(ErrorKind::EnumerationLimit,
                "Ext^1(" + quotient.to_string() + ", " + kernel.to_string() + ") has " +
                    total.get_str() + " elements, above the enumeration limit");

  std::vector<FgAbGroup> classes;
  std::vector<std::vector<Integer>> cocycle(qf.size(), std::vector<Integer>(nk, 0));
  // Odometer over all cocycle representatives.
  while (true) {
    classes.push_back(extension_middle_group(kernel, quotient, cocycle));
    std::size_t i = 0, k = 0;
    bool advanced = false;
    for (i = 0; i < qf.size() && !advanced; ++i)
      for (k = 0; k < nk; ++k) {
        if (++cocycle[i][k] < ranges[i][k]) {
          advanced = true;
          break;
        }
        cocycle[i][k] = 0;
      }
    if (!advanced) break;
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

FgAbGroup finite_group_from_kill_counts(
    const Integer& exponent, const std::function<Integer(const Integer&)>& count_killed_by) {
  require(exponent >= 1, "exponent must be positive");
  std::vector<Integer> orders;
  Integer rest = exponent;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned long v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++v;
    }
    // log_p |G[p^k]| = sum_i min(k, e_i); successive differences count the
    // cyclic p-factors of exponent at least k.
    std::vector<unsigned long> logs(v + 1, 0);
    Integer pk = 1;
    for (unsigned long k = 1; k <= v; ++k) {
      pk *= p;
      Integer c = count_killed_by(pk);
      unsigned long l = 0;
      while (c > 1) {
        require(mpz_divisible_ui_p(c.get_mpz_t(), p) != 0, "kill counts are not prime powers");
        c /= p;
        ++l;
      }
      logs[k] = l;
    }
    std::vector<unsigned long> at_least(v + 2, 0);
    for (unsigned long k = 1; k <= v; ++k) at_least[k] = logs[k] - logs[k - 1];
    Integer pe = 1;
    for (unsigned long e = 1; e <= v; ++e) {
      pe *= p;
      const unsigned long exactly = at_least[e] - at_least[e + 1];
      for (unsigned long n = 0; n < exactly; ++n) orders.push_back(pe);
    }
  }
  return FgAbGroup::from_cyclic_orders(0, orders);
}

}  // namespace invtqft::abelian

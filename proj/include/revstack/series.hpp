#ifndef REVSTACK_SERIES_HPP
#define REVSTACK_SERIES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revstack/bigint.hpp"

namespace revstack::series
{

class SeriesError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Formal power series over the rationals known through x^order.
///
/// Binary operations truncate to the smaller order of their operands, so a
/// result never claims more precision than its inputs carry.
class TruncatedSeries
{
public:
  explicit TruncatedSeries(int order = 0);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::vector<Rational> coefficients, int order);

  static TruncatedSeries constant(const Rational &c, int order);
  /// c * x^power
  static TruncatedSeries monomial(const Rational &c, int power, int order);
  static TruncatedSeries from_integers(const std::vector<long long> &coefficients, int order);

  int order() const noexcept { return _order; }
  const Rational &operator[](int power) const;
  const std::vector<Rational> &coefficients() const noexcept { return _coefficients; }

  /// Lowest power with a non-zero coefficient, nullopt if zero through order.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation(); }
  bool is_integral() const;
  /// Throws SeriesError when some coefficient is not an integer.
  std::vector<BigInt> integer_coefficients() const;

  TruncatedSeries truncated(int order) const;
  /// Multiplies by x^k (k >= 0); the order grows by k.
  TruncatedSeries shifted(int k) const;

  TruncatedSeries operator-() const;
  TruncatedSeries &operator+=(const TruncatedSeries &rhs);
  TruncatedSeries &operator-=(const TruncatedSeries &rhs);
  TruncatedSeries &operator*=(const TruncatedSeries &rhs);
  TruncatedSeries &operator*=(const Rational &c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries &b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational &c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational &c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  int _order;
  std::vector<Rational> _coefficients; // size _order + 1
};

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b);

/// 1/s; needs a non-zero constant term.
TruncatedSeries reciprocal(const TruncatedSeries &s);

/// num/den where den may start at x^v, v > 0, provided num also vanishes
/// below x^v. The result is known through min(orders) - v.
TruncatedSeries divide(const TruncatedSeries &num, const TruncatedSeries &den);

/// outer(inner(x)); inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner);

// -- Catalan building blocks -------------------------------------------------

inline constexpr int default_order = 20;
inline constexpr int default_order_cap = 30;

/// C(x) = 1 + x + 2x^2 + 5x^3 + ..., by the convolution C_{n+1} = sum C_i C_{n-i}.
TruncatedSeries catalan_series(int order);

struct CatalanCompositions
{
  TruncatedSeries t0; // C(x)
  TruncatedSeries t1; // C(x C(x))
  TruncatedSeries t2; // C(x C(x) C(x C(x)))
};

CatalanCompositions catalan_compositions(int order);

/// The five polynomials H_0..H_4 in t0 and t1 appearing in the closed form
/// of the tier-2 up-oriented series.
std::array<TruncatedSeries, 5> h_polynomials(const TruncatedSeries &t0, const TruncatedSeries &t1);

/// j-th y-derivative at y = 0 of the up-oriented generating function, j in
/// {0, 1, 2}: the x^n coefficient divided by j! counts length-n permutations
/// in M_U with rev-tier j.
TruncatedSeries mu_u_series(int j, int order, int order_cap = default_order_cap);

/// Length-n permutations of rev-tier exactly t, t in {0, 1, 2}, with the
/// empty permutation excluded (constant term 0).
TruncatedSeries tier_series(int t, int order, int order_cap = default_order_cap);

/// 1 / (1 - x C(x C(x))): counts rev-tier <= 1, constant term 1.
TruncatedSeries wilf_series(int order, int order_cap = default_order_cap);

/// x / (1 - 2x): permutations with no separated pair, by length.
TruncatedSeries no_separated_pair_series(int order);

} // namespace revstack::series

#endif // REVSTACK_SERIES_HPP

#include "revstack/series.hpp"

#include <algorithm>
#include <string>

namespace revstack::series
{

namespace
{

void check_order(int order, int cap)
{
  if (order < 0 || order > cap)
    throw SeriesError("order " + std::to_string(order) + " outside [0, " + std::to_string(cap) + "]");
}

// Extra precision for the closed forms, whose denominators vanish at x = 0.
constexpr int working_margin = 4;

struct Term
{
  int coefficient;
  int t0_power;
  int t1_power;
};

TruncatedSeries power(const TruncatedSeries &s, int e)
{
  auto r = TruncatedSeries::constant(1, s.order());
  for (int i = 0; i < e; ++i)
    r *= s;
  return r;
}

TruncatedSeries evaluate(std::initializer_list<Term> terms, const TruncatedSeries &t0, const TruncatedSeries &t1)
{
  const int order = std::min(t0.order(), t1.order());
  TruncatedSeries sum(order);
  for (const auto &term : terms)
    sum += Rational(term.coefficient) * power(t0, term.t0_power) * power(t1, term.t1_power);
  return sum;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order)
: _order(order), _coefficients(static_cast<std::size_t>(order) + 1, Rational(0))
{
  if (order < 0)
    throw SeriesError("series order must be non-negative");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int order)
: TruncatedSeries(order)
{
  const std::size_t n = std::min(coefficients.size(), _coefficients.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n), _coefficients.begin());
}

TruncatedSeries TruncatedSeries::constant(const Rational &c, int order)
{
  TruncatedSeries s(order);
  s._coefficients[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational &c, int power, int order)
{
  TruncatedSeries s(order);
  if (power < 0)
    throw SeriesError("negative power");
  if (power <= order)
    s._coefficients[static_cast<std::size_t>(power)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<long long> &coefficients, int order)
{
  std::vector<Rational> c(coefficients.begin(), coefficients.end());
  return TruncatedSeries(std::move(c), order);
}

const Rational &TruncatedSeries::operator[](int power) const
{
  if (power < 0 || power > _order)
    throw SeriesError("coefficient x^" + std::to_string(power) + " beyond order " + std::to_string(_order));
  return _coefficients[static_cast<std::size_t>(power)];
}

std::optional<int> TruncatedSeries::valuation() const
{
  for (std::size_t i = 0; i < _coefficients.size(); ++i)
    if (_coefficients[i] != 0)
      return static_cast<int>(i);
  return std::nullopt;
}

bool TruncatedSeries::is_integral() const
{
  return std::all_of(_coefficients.begin(), _coefficients.end(),
                     [](const Rational &c) { return boost::multiprecision::denominator(c) == 1; });
}

std::vector<BigInt> TruncatedSeries::integer_coefficients() const
{
  std::vector<BigInt> out;
  out.reserve(_coefficients.size());
  for (std::size_t i = 0; i < _coefficients.size(); ++i) {
    if (boost::multiprecision::denominator(_coefficients[i]) != 1)
      throw SeriesError("coefficient of x^" + std::to_string(i) + " is not an integer");
    out.push_back(boost::multiprecision::numerator(_coefficients[i]));
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
  return TruncatedSeries(_coefficients, std::min(order, _order));
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
  if (k < 0)
    throw SeriesError("shift must be non-negative");
  TruncatedSeries s(_order + k);
  std::copy(_coefficients.begin(), _coefficients.end(), s._coefficients.begin() + k);
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const
{
  TruncatedSeries s = *this;
  for (auto &c : s._coefficients)
    c = -c;
  return s;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs)
{
  *this = truncated(rhs._order);
  for (std::size_t i = 0; i < _coefficients.size(); ++i)
    _coefficients[i] += rhs._coefficients[i];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs)
{
  *this = truncated(rhs._order);
  for (std::size_t i = 0; i < _coefficients.size(); ++i)
    _coefficients[i] -= rhs._coefficients[i];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &rhs)
{
  const int order = std::min(_order, rhs._order);
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (_coefficients[static_cast<std::size_t>(i)] == 0)
      continue;
    for (int j = 0; i + j <= order; ++j)
      out._coefficients[static_cast<std::size_t>(i + j)] +=
        _coefficients[static_cast<std::size_t>(i)] * rhs._coefficients[static_cast<std::size_t>(j)];
  }
  *this = std::move(out);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &c)
{
  for (auto &x : _coefficients)
    x *= c;
  return *this;
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
  return a + b;
}

TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b)
{
  return a - b;
}

TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b)
{
  return a * b;
}

TruncatedSeries reciprocal(const TruncatedSeries &s)
{
  if (s[0] == 0)
    throw SeriesError("reciprocal needs a non-zero constant term");
  const int order = s.order();
  std::vector<Rational> r(static_cast<std::size_t>(order) + 1, Rational(0));
  const Rational inv = 1 / s[0];
  r[0] = inv;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      acc += s[i] * r[static_cast<std::size_t>(n - i)];
    r[static_cast<std::size_t>(n)] = -acc * inv;
  }
  return TruncatedSeries(std::move(r), order);
}

TruncatedSeries divide(const TruncatedSeries &num, const TruncatedSeries &den)
{
  const auto v = den.valuation();
  if (!v)
    throw SeriesError("division by a series that vanishes through its order");
  for (int i = 0; i < *v && i <= num.order(); ++i)
    if (num[i] != 0)
      throw SeriesError("quotient is not a power series");
  const int order = std::min(num.order(), den.order()) - *v;
  if (order < 0)
    throw SeriesError("division leaves no known coefficients");
  auto drop = [&](const TruncatedSeries &s) {
    std::vector<Rational> c(s.coefficients().begin() + *v, s.coefficients().end());
    return TruncatedSeries(std::move(c), order);
  };
  return drop(num) * reciprocal(drop(den));
}

TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner)
{
  if (inner[0] != 0)
    throw SeriesError("inner series of a composition needs a zero constant term");
  const int order = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(order);
  TruncatedSeries result = TruncatedSeries::constant(outer[order], order);
  for (int i = order - 1; i >= 0; --i) {
    result *= in;
    result += TruncatedSeries::constant(outer[i], order);
  }
  return result;
}

TruncatedSeries catalan_series(int order)
{
  if (order < 0)
    throw SeriesError("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    Rational acc = 0;
    for (int i = 0; i <= n; ++i)
      acc += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c[static_cast<std::size_t>(n + 1)] = acc;
  }
  return TruncatedSeries(std::move(c), order);
}

CatalanCompositions catalan_compositions(int order)
{
  const auto x = TruncatedSeries::monomial(1, 1, order);
  auto t0 = catalan_series(order);
  auto t1 = compose(t0, x * t0);
  auto t2 = compose(t0, x * t0 * t1);
  return {std::move(t0), std::move(t1), std::move(t2)};
}

std::array<TruncatedSeries, 5> h_polynomials(const TruncatedSeries &t0, const TruncatedSeries &t1)
{
  const int order = std::min(t0.order(), t1.order());
  const auto two = TruncatedSeries::constant(2, order);

  auto h0 = (two - t0) * evaluate({{1, 2, 0}, {2, 1, 1}, {-2, 1, 0}, {-1, 0, 1}, {1, 0, 0}}, t0, t1);

  auto h1 = evaluate({{-2, 4, 2}, {3, 4, 1}, {6, 3, 2}, {3, 4, 0}, {-5, 2, 2}, {-12, 3, 0}, {-9, 2, 1},
                      {2, 1, 2}, {11, 2, 0}, {-7, 1, 1}, {3, 1, 0}, {4, 0, 1}, {-4, 0, 0}},
                     t0, t1);

  auto h2 = evaluate({{2, 5, 2}, {-6, 5, 1}, {-2, 4, 2}, {-3, 5, 0}, {-7, 3, 2}, {12, 4, 0}, {14, 3, 1},
                      {7, 2, 2}, {-3, 3, 0}, {18, 2, 1}, {-4, 1, 2}, {-18, 2, 0}, {3, 1, 1}, {5, 1, 0},
                      {-2, 0, 1}, {2, 0, 0}},
                     t0, t1);

  auto h3 = t0 * evaluate({{3, 5, 1}, {-2, 4, 2}, {1, 5, 0}, {6, 4, 1}, {3, 3, 2}, {-4, 4, 0}, {-14, 3, 1},
                           {4, 2, 2}, {-6, 3, 0}, {-15, 2, 1}, {-3, 1, 2}, {15, 2, 0}, {-12, 1, 1},
                           {2, 0, 2}, {6, 1, 0}, {-4, 0, 0}},
                          t0, t1);

  auto h4 = -(t0 * t0) * evaluate({{4, 4, 1}, {-3, 3, 1}, {-3, 3, 0}, {-10, 2, 1}, {2, 2, 0}, {-1, 1, 1},
                                   {7, 1, 0}, {-2, 0, 1}, {-2, 0, 0}},
                                  t0, t1);

  return {std::move(h0), std::move(h1), std::move(h2), std::move(h3), std::move(h4)};
}

TruncatedSeries no_separated_pair_series(int order)
{
  const auto x = TruncatedSeries::monomial(1, 1, order);
  const auto one = TruncatedSeries::constant(1, order);
  return x * reciprocal(one - Rational(2) * x);
}

TruncatedSeries mu_u_series(int j, int order, int order_cap)
{
  check_order(order, order_cap);
  if (j < 0 || j > 2)
    throw SeriesError("closed forms are available for j = 0, 1, 2 only");

  const int w = order + working_margin;
  const auto x = TruncatedSeries::monomial(1, 1, w);
  const auto one = TruncatedSeries::constant(1, w);
  const auto [t0, t1, t2] = catalan_compositions(w);

  if (j == 0) {
    // C(x) - (1 - x)/(1 - 2x)
    auto m0 = t0 - (one - x) * reciprocal(one - Rational(2) * x);
    return m0.truncated(order);
  }

  const auto xt0 = x * t0;
  const auto one_minus_x_minus_t0 = one - x - t0;

  if (j == 1) {
    auto first = divide(xt0 * (divide(one - xt0, one - Rational(2) * xt0) - t1), one_minus_x_minus_t0);
    auto t0_6 = power(t0, 6);
    auto second_num = power(x, 4) * t0_6 * (one - x + x * (Rational(2) * x - Rational(3) * one) * t0);
    auto second_den = (one - Rational(2) * x) * one_minus_x_minus_t0 * (one - Rational(2) * xt0);
    auto m1 = first + divide(second_num, second_den);
    if (m1.order() < order)
      throw SeriesError("insufficient working precision");
    return m1.truncated(order);
  }

  const auto h = h_polynomials(t0, t1);
  const auto two_x_minus_one = Rational(2) * x - one;
  const auto a = xt0 * t1 + xt0 - one; // x t0 t1 + x t0 - 1
  const auto b = xt0 + x - one;        // x t0 + x - 1
  const auto c = xt0 + t1 - one;       // x t0 + t1 - 1
  const auto d = t0 * t0 + xt0 - Rational(3) * t0 - Rational(2) * x + Rational(2) * one;

  auto num = t1 * t0 * t0 * two_x_minus_one * (t0 - Rational(2) * one) * b * b * a * t2;
  for (int i = 0; i < 5; ++i)
    num += h[static_cast<std::size_t>(i)] * power(x, i);
  num = Rational(2) * power(x, 2) * num;
  auto den = a * c * d * b * b * two_x_minus_one;
  auto m2 = divide(num, den);
  if (m2.order() < order)
    throw SeriesError("insufficient working precision");
  return m2.truncated(order);
}

TruncatedSeries tier_series(int t, int order, int order_cap)
{
  check_order(order, order_cap);
  switch (t) {
  case 0:
    return catalan_series(order) - TruncatedSeries::constant(1, order);
  case 1:
    return mu_u_series(1, order, order_cap) + mu_u_series(0, order, order_cap);
  case 2:
    return mu_u_series(2, order, order_cap) * Rational(1, 2) + mu_u_series(1, order, order_cap);
  default:
    throw SeriesError("tier series are available for t = 0, 1, 2 only");
  }
}

TruncatedSeries wilf_series(int order, int order_cap)
{
  check_order(order, order_cap);
  const auto x = TruncatedSeries::monomial(1, 1, order);
  const auto t1 = catalan_compositions(order).t1;
  return reciprocal(TruncatedSeries::constant(1, order) - x * t1);
}

} // namespace revstack::series

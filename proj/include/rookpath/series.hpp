#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rookpath {

/// Exact rational coefficient type.
using Rational = mpq_class;

/// A formal power series truncated at a fixed order N: exact rational
/// coefficients c_0..c_N, no floating point anywhere.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    PowerSeries(int order, std::vector<Rational> coefficients);

    static PowerSeries constant(int order, const Rational& value);
    static PowerSeries monomial(int order, int degree, const Rational& value);

    int order() const { return order_; }
    const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, const Rational& value) { coeffs_[static_cast<std::size_t>(k)] = value; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);

/// Quotient h with g * h = f up to the truncation order; g needs a nonzero
/// constant term.
PowerSeries div(const PowerSeries& f, const PowerSeries& g);

/// f(g(x)) truncated; g needs a zero constant term.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// The square root with constant term 1; f needs constant term 1.
PowerSeries sqrt_series(const PowerSeries& f);

/// Copy truncated or zero-extended to a new order.
PowerSeries with_order(const PowerSeries& f, int order);

/// Catalan number series: c_0 = 1, c_{n+1} = sum c_i c_{n-i}.
PowerSeries catalan_series(int order);

/// Counting series of the 1342-avoiding permutations, constant term 0,
/// starting 0 + x + 2x^2 + 6x^3 + 23x^4 + ... Coefficients are asserted to be
/// nonnegative integers.
PowerSeries av1342_series(int order);

/// Counting series of the {3124, 1234}-avoiding permutations,
/// 1/(1 - x C(x C(x))): 1 + x + 2x^2 + 6x^3 + 22x^4 + ...
PowerSeries av3124_1234_series(int order);

/// True iff the rational is an integer >= 0.
bool is_nonnegative_integer(const Rational& value);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

}  // namespace rookpath

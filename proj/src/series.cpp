#include "rookpath/series.hpp"

#include <stdexcept>

namespace rookpath {

namespace {

void check_same_order(const PowerSeries& f, const PowerSeries& g) {
    if (f.order() != g.order()) throw std::invalid_argument("truncation orders must match");
}

}  // namespace

PowerSeries::PowerSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("need exactly order + 1 coefficients");
}

PowerSeries PowerSeries::constant(int order, const Rational& value) {
    PowerSeries f(order);
    f.set_coeff(0, value);
    return f;
}

PowerSeries PowerSeries::monomial(int order, int degree, const Rational& value) {
    PowerSeries f(order);
    if (degree <= order) f.set_coeff(degree, value);
    return f;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    check_same_order(f, g);
    PowerSeries h(f.order());
    for (int k = 0; k <= f.order(); ++k) h.set_coeff(k, f.coeff(k) + g.coeff(k));
    return h;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    check_same_order(f, g);
    PowerSeries h(f.order());
    for (int k = 0; k <= f.order(); ++k) h.set_coeff(k, f.coeff(k) - g.coeff(k));
    return h;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    check_same_order(f, g);
    PowerSeries h(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        Rational sum(0);
        for (int i = 0; i <= k; ++i) sum += f.coeff(i) * g.coeff(k - i);
        h.set_coeff(k, sum);
    }
    return h;
}

PowerSeries div(const PowerSeries& f, const PowerSeries& g) {
    check_same_order(f, g);
    if (g.coeff(0) == 0) throw std::invalid_argument("divisor needs a nonzero constant term");
    PowerSeries h(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        Rational sum = f.coeff(k);
        for (int i = 0; i < k; ++i) sum -= h.coeff(i) * g.coeff(k - i);
        h.set_coeff(k, sum / g.coeff(0));
    }
    return h;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    check_same_order(f, g);
    if (g.coeff(0) != 0) throw std::invalid_argument("inner series needs a zero constant term");
    // Horner over truncated series.
    PowerSeries result = PowerSeries::constant(f.order(), f.coeff(f.order()));
    for (int k = f.order() - 1; k >= 0; --k) {
        result = result * g;
        result.set_coeff(0, result.coeff(0) + f.coeff(k));
    }
    return result;
}

PowerSeries sqrt_series(const PowerSeries& f) {
    if (f.coeff(0) != 1) throw std::invalid_argument("square root needs constant term 1");
    PowerSeries g(f.order());
    g.set_coeff(0, Rational(1));
    for (int k = 1; k <= f.order(); ++k) {
        Rational sum = f.coeff(k);
        for (int i = 1; i < k; ++i) sum -= g.coeff(i) * g.coeff(k - i);
        g.set_coeff(k, sum / 2);
    }
    return g;
}

PowerSeries with_order(const PowerSeries& f, int order) {
    PowerSeries g(order);
    for (int k = 0; k <= std::min(order, f.order()); ++k) g.set_coeff(k, f.coeff(k));
    return g;
}

PowerSeries catalan_series(int order) {
    PowerSeries c(order);
    c.set_coeff(0, Rational(1));
    for (int n = 0; n < order; ++n) {
        Rational sum(0);
        for (int i = 0; i <= n; ++i) sum += c.coeff(i) * c.coeff(n - i);
        c.set_coeff(n + 1, sum);
    }
    return c;
}

PowerSeries av1342_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    const int inner_order = order + 1;
    const PowerSeries one_minus_8x =
        PowerSeries::constant(inner_order, 1) - PowerSeries::monomial(inner_order, 1, 8);
    const PowerSeries three_halves_power = one_minus_8x * sqrt_series(one_minus_8x);

    PowerSeries numerator = PowerSeries::monomial(inner_order, 2, 8) +
                            PowerSeries::monomial(inner_order, 1, 12) -
                            PowerSeries::constant(inner_order, 1) + three_halves_power;
    if (numerator.coeff(0) != 0)
        throw std::logic_error("expected exact cancellation of the constant term");

    // Division by 32x: drop the (zero) constant term and divide by 32.
    PowerSeries shifted(order);
    for (int k = 0; k <= order; ++k) shifted.set_coeff(k, numerator.coeff(k + 1) / 32);
    if (shifted.coeff(0) != 0)
        throw std::logic_error("expected exact cancellation of the linear term");

    const PowerSeries one = PowerSeries::constant(order, 1);
    PowerSeries result = div(one, one - shifted) - one;

    if (result.coeff(0) != 0 || result.coeff(1) != 1)
        throw std::logic_error("class counting series must start 0 + x");
    for (int k = 0; k <= order; ++k)
        if (!is_nonnegative_integer(result.coeff(k)))
            throw std::logic_error("class counting series must have nonnegative integer coefficients");
    return result;
}

PowerSeries av3124_1234_series(int order) {
    const PowerSeries c = catalan_series(order);
    const PowerSeries x = PowerSeries::monomial(order, 1, 1);
    const PowerSeries a = compose(c, x * c);
    const PowerSeries one = PowerSeries::constant(order, 1);
    PowerSeries result = div(one, one - x * a);
    for (int k = 0; k <= order; ++k)
        if (!is_nonnegative_integer(result.coeff(k)))
            throw std::logic_error("class counting series must have nonnegative integer coefficients");
    return result;
}

bool is_nonnegative_integer(const Rational& value) {
    return value.get_den() == 1 && value.get_num() >= 0;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace rookpath

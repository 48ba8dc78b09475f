#include "genfun/series.hpp"

#include <algorithm>
#include <sstream>

#include "genfun/errors.hpp"

namespace genfun {

Series::Series(int order) {
    if (order < 0)
        throw IndexBeyondOrder("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw IndexBeyondOrder("series needs at least the constant coefficient");
}

Series::Series(std::initializer_list<Rational> coeffs)
    : Series(std::vector<Rational>(coeffs)) {}

Series Series::constant(const Rational& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::identity(int order) {
    return monomial(Rational(1), 1, order);
}

Series Series::monomial(const Rational& c, int k, int order) {
    if (k < 0 || k > order)
        throw IndexBeyondOrder("monomial degree outside series order");
    Series s(order);
    s.c_[static_cast<size_t>(k)] = c;
    return s;
}

const Rational& Series::coefficient(int n) const {
    if (n < 0 || n > order())
        throw IndexBeyondOrder("coefficient index " + std::to_string(n) +
                               " beyond truncation order " + std::to_string(order()));
    return c_[static_cast<size_t>(n)];
}

Series Series::truncate(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw IndexBeyondOrder("cannot truncate order " + std::to_string(order()) +
                               " series to order " + std::to_string(new_order));
    return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& a) { return a.is_zero(); });
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        const Rational& a = c_[static_cast<size_t>(n)];
        if (a.is_zero())
            continue;
        if (first) {
            os << (a.sign() < 0 ? "-" : "");
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = a.abs();
        if (n == 0) {
            os << mag.str();
        } else {
            if (mag != Rational(1))
                os << mag.str() << " ";
            os << "z";
            if (n > 1)
                os << "^" << n;
        }
    }
    if (first)
        os << "0";
    os << " + O(z^" << order() + 1 << ")";
    return os.str();
}

namespace {

int common_order(const Series& f, const Series& g) {
    return std::min(f.order(), g.order());
}

} // namespace

Series operator+(const Series& f, const Series& g) {
    const int N = common_order(f, g);
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        c[static_cast<size_t>(n)] = f.coefficient(n) + g.coefficient(n);
    return Series(std::move(c));
}

Series operator-(const Series& f, const Series& g) {
    const int N = common_order(f, g);
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        c[static_cast<size_t>(n)] = f.coefficient(n) - g.coefficient(n);
    return Series(std::move(c));
}

Series operator-(const Series& f) {
    std::vector<Rational> c(f.coefficients());
    for (auto& a : c)
        a = -a;
    return Series(std::move(c));
}

Series operator*(const Series& f, const Series& g) {
    const int N = common_order(f, g);
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
        if (f.coefficient(i).is_zero())
            continue;
        for (int j = 0; i + j <= N; ++j)
            c[static_cast<size_t>(i + j)] += f.coefficient(i) * g.coefficient(j);
    }
    return Series(std::move(c));
}

Series operator*(const Rational& c, const Series& f) {
    std::vector<Rational> r(f.coefficients());
    for (auto& a : r)
        a *= c;
    return Series(std::move(r));
}

Series operator/(const Series& f, const Series& g) {
    if (g.coefficient(0).is_zero())
        throw DivisionByNonUnit("series division requires a nonzero constant term");
    const int N = common_order(f, g);
    std::vector<Rational> q(static_cast<size_t>(N) + 1);
    const Rational inv_g0 = Rational(1) / g.coefficient(0);
    for (int n = 0; n <= N; ++n) {
        Rational acc = f.coefficient(n);
        for (int k = 1; k <= n; ++k)
            acc -= g.coefficient(k) * q[static_cast<size_t>(n - k)];
        q[static_cast<size_t>(n)] = acc * inv_g0;
    }
    return Series(std::move(q));
}

Series compose(const Series& f, const Series& g) {
    if (!g.coefficient(0).is_zero())
        throw NonzeroConstantTerm("composition requires the inner series to vanish at 0");
    const int N = common_order(f, g);
    // Coefficients of f past order N cannot reach order <= N: each f_k g^k
    // has valuation >= k.  Horner from the highest contributing one down.
    const int top = std::min(f.order(), N);
    Series r = Series::constant(f.coefficient(top), N);
    const Series gt = g.truncate(N);
    for (int k = top - 1; k >= 0; --k)
        r = (r * gt) + Series::constant(f.coefficient(k), N);
    return r;
}

namespace {

// z^-k * s for a series known to start at z^k; the low coefficients must
// actually vanish.  Order drops by k, honestly: nothing is invented.
Series shift_down(const Series& s, int k) {
    for (int n = 0; n < k; ++n)
        if (!s.coefficient(n).is_zero())
            throw NotInvertible("internal: expected vanishing low-order coefficients");
    std::vector<Rational> c(s.coefficients().begin() + k, s.coefficients().end());
    return Series(std::move(c));
}

// z^k * s; every coefficient of the result is determined by s.
Series shift_up(const Series& s, int k) {
    std::vector<Rational> c(static_cast<size_t>(s.order() + k) + 1, Rational(0));
    for (int n = 0; n <= s.order(); ++n)
        c[static_cast<size_t>(n + k)] = s.coefficient(n);
    return Series(std::move(c));
}

} // namespace

Series revert(const Series& f) {
    if (!f.coefficient(0).is_zero())
        throw NonzeroConstantTerm("reversion requires f(0) = 0");
    const int N = f.order();
    if (N < 1 || f.coefficient(1).is_zero())
        throw NotInvertible("reversion requires a nonzero linear coefficient");

    // Newton iteration g <- g - (f(g) - z)/f'(g), doubling the number of
    // correct coefficients each pass.  The residual f(g) - z has valuation
    // >= 2 throughout, so it is divided as z^2 * (shifted residual) / f'(g);
    // that keeps every coefficient of the correction honest even though
    // f'(g) is only known to order N-1.
    const Series z = Series::identity(N);
    Series g = (Rational(1) / f.coefficient(1)) * z;
    if (N == 1)
        return g;
    const Series fp = derive(f);
    for (int correct = 1; correct < N; correct *= 2) {
        const Series residual = compose(f, g) - z;
        if (residual.is_zero())
            break;
        const Series correction = shift_down(residual, 2) / compose(fp, g.truncate(N - 1));
        g = g - shift_up(correction, 2);
    }
    return g;
}

Series derive(const Series& f) {
    if (f.order() == 0)
        return Series(0);
    std::vector<Rational> c(static_cast<size_t>(f.order()));
    for (int n = 1; n <= f.order(); ++n)
        c[static_cast<size_t>(n - 1)] = Rational(n) * f.coefficient(n);
    return Series(std::move(c));
}

Series integrate(const Series& f) {
    std::vector<Rational> c(static_cast<size_t>(f.order()) + 2, Rational(0));
    for (int n = 0; n <= f.order(); ++n)
        c[static_cast<size_t>(n + 1)] = f.coefficient(n) / Rational(n + 1);
    return Series(std::move(c));
}

Series exp(const Series& f) {
    if (!f.coefficient(0).is_zero())
        throw BadConstantTerm("series exp requires constant term 0");
    const int N = f.order();
    std::vector<Rational> g(static_cast<size_t>(N) + 1, Rational(0));
    g[0] = Rational(1);
    // g' = f' g  =>  n g_n = sum_{k=1..n} k f_k g_{n-k}
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k)
            acc += Rational(k) * f.coefficient(k) * g[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = acc / Rational(n);
    }
    return Series(std::move(g));
}

Series log(const Series& f) {
    if (f.coefficient(0) != Rational(1))
        throw BadConstantTerm("series log requires constant term 1");
    if (f.order() == 0)
        return Series(0);
    // log f = integral of f'/f, which lands back on the original order.
    return integrate(derive(f) / f.truncate(f.order() - 1));
}

Series pow(const Series& f, const Rational& r) {
    if (f.coefficient(0) != Rational(1))
        throw BadConstantTerm("series pow requires constant term 1");
    if (r.is_zero())
        return Series::constant(Rational(1), f.order());
    return exp(r * log(f));
}

double eval_partial(const Series& f, double z, int N) {
    if (N < 0 || N > f.order())
        throw IndexBeyondOrder("partial sum length exceeds series order");
    // Horner from the top coefficient down.
    double acc = 0.0;
    for (int n = N; n >= 0; --n)
        acc = acc * z + f.coefficient(n).to_double();
    return acc;
}

Rational eval_exact(const Series& f, const Rational& z, int N) {
    if (N < 0 || N > f.order())
        throw IndexBeyondOrder("partial sum length exceeds series order");
    Rational acc(0);
    for (int n = N; n >= 0; --n)
        acc = acc * z + f.coefficient(n);
    return acc;
}

} // namespace genfun

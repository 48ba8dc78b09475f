#include "genfun/bernoulli.hpp"

#include <mutex>

#include "genfun/combinatorics.hpp"
#include "genfun/errors.hpp"

namespace genfun {

BernoulliTable::BernoulliTable(int max_index) {
    if (max_index < 0)
        throw DomainError("Bernoulli table size must be >= 0");
    // (e^z - 1)/z has coefficients 1/(n+1)!; invert and read off B_n/n!.
    std::vector<Rational> d(static_cast<size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        d[static_cast<size_t>(n)] = Rational(1) / factorial(static_cast<unsigned>(n) + 1);
    const Series gf = Series::constant(Rational(1), max_index) / Series(std::move(d));
    b_.reserve(static_cast<size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        b_.push_back(gf.coefficient(n) * factorial(static_cast<unsigned>(n)));
}

const Rational& BernoulliTable::number(int n) const {
    if (n < 0 || n > max_index())
        throw IndexBeyondOrder("Bernoulli index outside table");
    return b_[static_cast<size_t>(n)];
}

Rational BernoulliTable::gf_coefficient(int n) const {
    return number(n) / factorial(static_cast<unsigned>(n));
}

namespace {

// E_n via 2 e^{z/2}/(e^z + 1) = sum E_n(1/2) z^n/n! and E_n = 2^n E_n(1/2).
std::vector<Rational> build_euler(int max_index) {
    std::vector<Rational> num(static_cast<size_t>(max_index) + 1);
    std::vector<Rational> den(static_cast<size_t>(max_index) + 1);
    const Rational half(1, 2);
    for (int n = 0; n <= max_index; ++n) {
        const Rational inv_fact = Rational(1) / factorial(static_cast<unsigned>(n));
        num[static_cast<size_t>(n)] = Rational(2) * rational_pow(half, n) * inv_fact;
        den[static_cast<size_t>(n)] = inv_fact;
    }
    den[0] = Rational(2); // e^z + 1 at z^0
    const Series gf = Series(std::move(num)) / Series(std::move(den));
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        v.push_back(gf.coefficient(n) * factorial(static_cast<unsigned>(n)) *
                    rational_pow(Rational(2), n));
    return v;
}

// [z^n] 2/(e^z + 1) = E_n(0)/n!.
std::vector<Rational> build_euler_gf0(int max_index) {
    std::vector<Rational> den(static_cast<size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n)
        den[static_cast<size_t>(n)] = Rational(1) / factorial(static_cast<unsigned>(n));
    den[0] = Rational(2);
    const Series gf = Series::constant(Rational(2), max_index) / Series(std::move(den));
    return gf.coefficients();
}

std::vector<Rational> build_bernoulli(int max_index) {
    return BernoulliTable(max_index).numbers();
}

// One lock guards all three caches; lookups copy the value out, so growth
// never invalidates anything a caller holds.
std::mutex table_mutex;

Rational cached(std::vector<Rational>& cache, int n,
                std::vector<Rational> (*build)(int)) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (static_cast<int>(cache.size()) <= n) {
        int size = cache.empty() ? 64 : static_cast<int>(cache.size());
        while (size <= n)
            size *= 2;
        cache = build(size - 1);
    }
    return cache[static_cast<size_t>(n)];
}

} // namespace

Rational bernoulli_number(int n) {
    if (n < 0)
        throw IndexBeyondOrder("Bernoulli index must be >= 0");
    if (n > 2 && n % 2 == 1)
        return Rational(0); // the odd ones past B_1 vanish; skip the table
    static std::vector<Rational> cache;
    return cached(cache, n, build_bernoulli);
}

Rational euler_number(int n) {
    if (n < 0)
        throw IndexBeyondOrder("Euler index must be >= 0");
    static std::vector<Rational> cache;
    return cached(cache, n, build_euler);
}

Rational euler_gf0_coefficient(int n) {
    if (n < 0)
        throw IndexBeyondOrder("Euler index must be >= 0");
    static std::vector<Rational> cache;
    return cached(cache, n, build_euler_gf0);
}

Rational bernoulli_polynomial(int n, const Rational& a) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k)
        acc += Rational(binomial_int(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
               bernoulli_number(k) * rational_pow(a, n - k);
    return acc;
}

Rational euler_polynomial(int n, const Rational& a) {
    const Rational shifted = a - Rational(1, 2);
    Rational acc(0);
    for (int k = 0; k <= n; ++k)
        acc += Rational(binomial_int(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
               euler_number(k) / rational_pow(Rational(2), k) *
               rational_pow(shifted, n - k);
    return acc;
}

} // namespace genfun

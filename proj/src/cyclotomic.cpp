#include "nichols/scalar.hpp"

#include <stdexcept>
#include <utility>

namespace nichols {

namespace {

template <class Poly>
void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RationalPoly poly_sub(RationalPoly a, const RationalPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder over Q; divisor must be nonzero.
std::pair<RationalPoly, RationalPoly> poly_divmod(RationalPoly a, const RationalPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    RationalPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    const mpq_class lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / lead;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    trim(q);
    return {q, a};
}

}  // namespace

IntegerPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial needs n >= 1");
    // x^n - 1
    RationalPoly p(size_t(n) + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntegerPoly phi_d = cyclotomic_polynomial(d);
        RationalPoly divisor(phi_d.begin(), phi_d.end());
        auto [q, r] = poly_divmod(p, divisor);
        if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
        p = std::move(q);
    }
    IntegerPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        if (c.get_den() != 1) throw std::logic_error("non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicField::CyclotomicField(int order) : order_(order < 1 ? 1 : order) {
    const IntegerPoly phi = cyclotomic_polynomial(order_);
    modulus_.assign(phi.begin(), phi.end());
    powers_.reserve(order_);
    RationalPoly x_pow{1};
    for (int k = 0; k < order_; ++k) {
        powers_.push_back(x_pow);
        x_pow.insert(x_pow.begin(), mpq_class(0));
        x_pow = reduce(std::move(x_pow));
    }
}

RationalPoly CyclotomicField::root_power(int64_t k) const {
    int64_t r = k % order_;
    if (r < 0) r += order_;
    return powers_[size_t(r)];
}

RationalPoly CyclotomicField::reduce(RationalPoly p) const {
    trim(p);
    if (p.size() < modulus_.size()) return p;
    return poly_divmod(std::move(p), modulus_).second;
}

RationalPoly CyclotomicField::multiply(const RationalPoly& a, const RationalPoly& b) const {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1) {
        RationalPoly out = b;
        for (auto& c : out) c *= a[0];
        return out;
    }
    if (b.size() == 1) {
        RationalPoly out = a;
        for (auto& c : out) c *= b[0];
        return out;
    }
    return reduce(poly_mul(a, b));
}

RationalPoly CyclotomicField::inverse(const RationalPoly& a) const {
    if (a.empty()) throw std::domain_error("inverse of zero in cyclotomic field");
    if (a.size() == 1) return {1 / a[0]};
    // Extended Euclid: track s with s*a == r (mod modulus).
    RationalPoly r0 = modulus_, r1 = a;
    RationalPoly s0, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = poly_divmod(r0, r1);
        RationalPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw std::domain_error("element not invertible modulo cyclotomic polynomial");
    const mpq_class c = r1[0];
    for (auto& v : s1) v /= c;
    return reduce(std::move(s1));
}

}  // namespace nichols

#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Scalars of an exact field. Elements carry their own context (prime,
/// modulus, precision, ...), so zero/one are derived from an existing value.
template <class K>
concept FieldScalar = requires(const K& a, const K& b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<K>;
    { a.one_like() } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
};

/// Indistinguishable from zero at the scalar's working precision. Exact
/// fields only have the exact zero; Q_p overloads this to cover valuations
/// at or beyond the precision cap.
template <FieldScalar K>
bool negligible(const K& x) {
    return x.is_zero();
}

/// Dense univariate polynomial, coefficients stored constant term first.
/// The zero polynomial is the empty list (degree -1).
template <FieldScalar K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }

    /// The monomial x, with scalars matching `sample`'s context.
    static Poly gen(const K& sample) {
        return Poly(std::vector<K>{sample.zero_like(), sample.one_like()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    /// Coefficient of x^i, zero past the degree.
    K coeff_or_zero(int i, const K& sample) const {
        if (i < 0 || i > degree()) return sample.zero_like();
        return c_[static_cast<size_t>(i)];
    }

    const K& lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && lc() == lc().one_like(); }

    Poly operator+(const Poly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        std::vector<K> out;
        size_t n = std::max(c_.size(), o.c_.size());
        out.reserve(n);
        const K zero = c_[0].zero_like();
        for (size_t i = 0; i < n; ++i) {
            const K& a = i < c_.size() ? c_[i] : zero;
            const K& b = i < o.c_.size() ? o.c_[i] : zero;
            out.push_back(a + b);
        }
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<K> out;
        out.reserve(c_.size());
        for (const K& k : c_) out.push_back(-k);
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        const K zero = c_[0].zero_like();
        std::vector<K> out(c_.size() + o.c_.size() - 1, zero);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                out[i + j] = out[i + j] + c_[i] * o.c_[j];
            }
        }
        return Poly(std::move(out));
    }

    Poly scaled(const K& s) const {
        std::vector<K> out;
        out.reserve(c_.size());
        for (const K& k : c_) out.push_back(k * s);
        return Poly(std::move(out));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        if (is_zero()) return x.zero_like();
        K acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        for (int i = 1; i <= degree(); ++i) out.push_back(mul_int(c_[static_cast<size_t>(i)], i));
        return Poly(std::move(out));
    }

    /// Euclidean division; the divisor's leading coefficient must be invertible.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        if (den.is_zero()) throw std::domain_error("polynomial division by zero");
        if (num.degree() < den.degree()) return {Poly(), num};
        const K zero = den.lc().zero_like();
        const K lcinv = den.lc().inverse();
        std::vector<K> rem = num.c_;
        std::vector<K> quot(static_cast<size_t>(num.degree() - den.degree() + 1), zero);
        for (int i = num.degree(); i >= den.degree(); --i) {
            const K& top = rem[static_cast<size_t>(i)];
            if (top.is_zero()) continue;
            K q = top * lcinv;
            quot[static_cast<size_t>(i - den.degree())] = q;
            for (int j = 0; j <= den.degree(); ++j) {
                size_t k = static_cast<size_t>(i - den.degree() + j);
                rem[k] = rem[k] - q * den.c_[static_cast<size_t>(j)];
            }
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly mod(const Poly& den) const { return divmod(*this, den).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inverse());
    }

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Returns (g, s, t) with s*a + t*b = g, g the monic gcd.
    static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
        if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
        const K sample = a.is_zero() ? b.c_[0] : a.c_[0];
        Poly r0 = a, r1 = b;
        Poly s0 = Poly::constant(sample.one_like()), s1;
        Poly t0, t1 = Poly::constant(sample.one_like());
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            Poly s = s0 - q * s1;
            Poly t = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s);
            t0 = std::move(t1); t1 = std::move(t);
        }
        K inv = r0.lc().inverse();
        return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
    }

private:
    static K mul_int(const K& k, int n) {
        // double-and-add; keeps the concept free of an integer constructor
        if (n == 0) return k.zero_like();
        bool neg = n < 0;
        unsigned m = static_cast<unsigned>(neg ? -n : n);
        K acc = k.zero_like();
        K base = k;
        while (m > 0) {
            if (m & 1u) acc = acc + base;
            m >>= 1u;
            if (m > 0) base = base + base;
        }
        return neg ? -acc : acc;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

}  // namespace brauer

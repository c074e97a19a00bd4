#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace brauer {

using Int = mpz_class;

/// Exact rational scalar. Always kept canonical: gcd(|num|, den) = 1, den > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit from integer literals is intended
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    Rat operator+(const Rat& o) const { return Rat(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return Rat(v_ - o.v_); }
    Rat operator*(const Rat& o) const { return Rat(v_ * o.v_); }
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inverse() const;

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Rat zero_like() const { return Rat(); }
    Rat one_like() const { return Rat(1); }
    int sign() const { return sgn(v_); }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    /// Canonical text form: "num" when the denominator is 1, else "num/den".
    std::string str() const;
    static Rat parse(const std::string& text);

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

/// Multiplicity of p in a nonzero integer.
long int_valuation(const Int& n, long p);
/// v_p(num) - v_p(den) of a nonzero rational.
long rat_valuation(const Rat& q, long p);

bool is_prime(long n);
/// Product of the primes dividing n to an odd power (sign preserved); 0 maps to 0.
Int squarefree_part(const Int& n);
/// Ascending list of distinct primes dividing |n|.
std::vector<long> prime_divisors(const Int& n);

Int int_pow(long base, unsigned exp);

}  // namespace brauer

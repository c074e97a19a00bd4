#include "brauer/rational.hpp"

#include <stdexcept>

namespace brauer {

Rat::Rat(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rat(num, den);
}

long int_valuation(const Int& n, long p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    Int m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

long rat_valuation(const Rat& q, long p) {
    return int_valuation(q.num(), p) - int_valuation(q.den(), p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int m = abs(n);
    Int out = (n < 0) ? -1 : 1;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int mult = 0;
        while (m % d == 0) {
            m /= d;
            ++mult;
        }
        if (mult % 2 == 1) out *= d;
    }
    return out * m;
}

std::vector<long> prime_divisors(const Int& n) {
    std::vector<long> out;
    Int m = abs(n);
    if (m <= 1) return out;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.push_back(d.get_si());
        while (m % d == 0) m /= d;
    }
    if (m > 1) out.push_back(m.get_si());
    return out;
}

Int int_pow(long base, unsigned exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && exp % 2 == 1) out = -out;
    return out;
}

}  // namespace brauer

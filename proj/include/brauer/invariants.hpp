#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/crossed.hpp"
#include "brauer/extfield.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Class invariant in Q/Z, stored as a reduced rational in [0, 1).
class BrauerInvariant {
public:
    BrauerInvariant() : v_(0) {}
    explicit BrauerInvariant(const Rat& q) : v_(mod1(q)) {}

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    /// Order in Q/Z: the reduced denominator.
    long order() const { return v_.den().get_si(); }

    BrauerInvariant operator+(const BrauerInvariant& o) const { return BrauerInvariant(v_ + o.v_); }
    BrauerInvariant operator-() const { return BrauerInvariant(-v_); }
    BrauerInvariant operator-(const BrauerInvariant& o) const { return *this + (-o); }

    bool operator==(const BrauerInvariant& o) const { return v_ == o.v_; }
    bool operator!=(const BrauerInvariant& o) const { return !(*this == o); }
    bool operator<(const BrauerInvariant& o) const { return v_ < o.v_; }

    /// "0" or "k/n".
    std::string str() const { return v_.str(); }

private:
    static Rat mod1(const Rat& q);
    Rat v_;
};

inline BrauerInvariant inv_add(const BrauerInvariant& a, const BrauerInvariant& b) { return a + b; }
inline BrauerInvariant inv_neg(const BrauerInvariant& a) { return -a; }
inline long inv_order(const BrauerInvariant& a) { return a.order(); }

/// The real place or a finite prime.
struct Place {
    long p;  // 0 encodes the real place
    static Place real() { return Place{0}; }
    static Place prime(long p) { return Place{p}; }
    bool is_real() const { return p == 0; }
    bool operator<(const Place& o) const { return p < o.p; }
    bool operator==(const Place& o) const { return p == o.p; }
    std::string str() const { return is_real() ? "real" : std::to_string(p); }
};

/// Invariant at the real place of the cyclic algebra (sigma, R(sqrt a), b):
/// 1/2 exactly when both a and b are negative (b outside the norms of C).
BrauerInvariant real_invariant(const Rat& a, const Rat& b);

/// Cyclic presentation (sigma, W, r) over Q_p with W unramified; carries the
/// claimed generator so that non-Frobenius data can be rejected.
struct PadicCyclicSpec {
    UnramifiedExtension W;
    Automorphism<PadicNumber> sigma;
    PadicNumber r;

    static PadicCyclicSpec make(UnramifiedExtension w, PadicNumber r_value) {
        auto frob = w.frobenius;
        return PadicCyclicSpec{std::move(w), std::move(frob), std::move(r_value)};
    }
    static PadicCyclicSpec make_with_sigma(UnramifiedExtension w, Automorphism<PadicNumber> s,
                                           PadicNumber r_value) {
        return PadicCyclicSpec{std::move(w), std::move(s), std::move(r_value)};
    }

    std::shared_ptr<const GaloisData<PadicNumber>> galois() const {
        return GaloisData<PadicNumber>::make(W.field, sigma, W.local.f);
    }
};

/// The invariant map pi^s N(W^x) -> s/f of the local class computation:
/// value (v_p(r) mod f)/f. Requires sigma to be the Frobenius of W.
BrauerInvariant padic_invariant(const PadicCyclicSpec& spec);

/// (sigma-bar, W_f, r) ~ (sigma, W_{mf}, r^m): same class, bigger field.
PadicCyclicSpec inflate_cyclic(const PadicCyclicSpec& spec, const UnramifiedExtension& larger);

/// Local invariant of the quaternion symbol (a, b) at a place, via norm
/// membership in k_v(sqrt a). Arguments are normalized to squarefree
/// representatives of their square classes first.
BrauerInvariant quaternion_local_invariant(const Rat& a, const Rat& b, const Place& place,
                                           int precision = 32);

struct GlobalSumResult {
    std::map<Place, BrauerInvariant> locals;  // real place plus primes dividing 2ab
    bool sum_zero;
};

/// Evaluates the reciprocity identity: invariants at the real place and at
/// every prime dividing 2ab, everything else provably zero (spot-checked at
/// three extra primes), and their sum mod 1.
GlobalSumResult global_sum_check(const Rat& a, const Rat& b, int precision = 32);

}  // namespace brauer

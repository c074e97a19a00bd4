#include "brauer/fields.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace brauer {

namespace {

long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    return ((t % p) + p) % p;
}

/// base^e mod f over F_p by square-and-multiply on the bits of e.
Poly<FpElem> poly_powmod(Poly<FpElem> base, const Int& e, const Poly<FpElem>& f) {
    Poly<FpElem> acc = Poly<FpElem>::constant(FpElem(f.lc().p(), 1));
    base = base.mod(f);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = (acc * acc).mod(f);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = (acc * base).mod(f);
    }
    return acc;
}

std::vector<long> poly_key(const Poly<FpElem>& f) {
    std::vector<long> key;
    key.reserve(static_cast<size_t>(f.degree() + 1));
    for (const FpElem& c : f.coeffs()) key.push_back(c.value());
    return key;
}

}  // namespace

FpElem::FpElem(long p, long value) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    p_ = p;
    v_ = ((value % p) + p) % p;
}

const FpElem& FpElem::check(const FpElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed prime fields");
    return o;
}

FpElem FpElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_p");
    return make(p_, mod_inverse(v_, p_));
}

FpElem FpElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FpElem acc = one_like();
    FpElem base = *this;
    Int m = e;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

Poly<FpElem> fp_poly(long p, const std::vector<long>& coeffs) {
    std::vector<FpElem> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(p, v);
    return Poly<FpElem>(std::move(c));
}

bool is_irreducible(const Poly<FpElem>& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (!f.is_monic()) return false;
    long p = f.lc().p();
    if (d == 1) return true;
    Poly<FpElem> x = Poly<FpElem>::gen(f.lc());

    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    if (poly_powmod(x, pd, f) != x.mod(f)) return false;

    for (long l : prime_divisors(Int(d))) {
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(d / l));
        Poly<FpElem> diff = poly_powmod(x, pe, f) - x.mod(f);
        if (Poly<FpElem>::gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

Poly<FpElem> find_irreducible(long p, int d) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    Int total = int_pow(p, static_cast<unsigned>(d));
    for (Int k = 0; k < total; ++k) {
        std::vector<long> coeffs(static_cast<size_t>(d) + 1, 0);
        Int rest = k;
        for (int i = 0; i < d; ++i) {
            coeffs[static_cast<size_t>(i)] = mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p));
            rest /= p;
        }
        coeffs[static_cast<size_t>(d)] = 1;
        Poly<FpElem> f = fp_poly(p, coeffs);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const FqContext> FqContext::make(long p, Poly<FpElem> modulus) {
    if (!modulus.is_monic()) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible over F_p");
    auto ctx = std::make_shared<FqContext>();
    ctx->p = p;
    ctx->degree = modulus.degree();
    ctx->modulus = std::move(modulus);
    return ctx;
}

std::shared_ptr<const FqContext> FqContext::canonical(long p, int d) {
    static std::map<std::pair<long, int>, std::shared_ptr<const FqContext>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{p, d}];
    if (!slot) slot = make(p, find_irreducible(p, d));
    return slot;
}

FqElem::FqElem(std::shared_ptr<const FqContext> ctx, Poly<FpElem> rep)
    : ctx_(std::move(ctx)), rep_(rep.mod(ctx_->modulus)) {}

std::vector<long> FqElem::coords() const {
    std::vector<long> out(static_cast<size_t>(ctx_->degree), 0);
    for (int i = 0; i <= rep_.degree(); ++i) out[static_cast<size_t>(i)] = rep_[i].value();
    return out;
}

namespace {
const FqContext& common_ctx(const FqElem& a, const FqElem& b) {
    if (a.ctx_ptr() != b.ctx_ptr() &&
        (a.ctx().p != b.ctx().p || a.ctx().modulus != b.ctx().modulus))
        throw std::invalid_argument("mixed finite fields");
    return a.ctx();
}
}  // namespace

FqElem FqElem::operator+(const FqElem& o) const {
    common_ctx(*this, o);
    return FqElem(ctx_, rep_ + o.rep_);
}
FqElem FqElem::operator-(const FqElem& o) const {
    common_ctx(*this, o);
    return FqElem(ctx_, rep_ - o.rep_);
}
FqElem FqElem::operator*(const FqElem& o) const {
    common_ctx(*this, o);
    return FqElem(ctx_, (rep_ * o.rep_).mod(ctx_->modulus));
}
FqElem FqElem::operator-() const { return FqElem(ctx_, -rep_); }

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_q");
    auto [g, s, t] = Poly<FpElem>::ext_gcd(rep_, ctx_->modulus);
    (void)t;
    if (g.degree() != 0) throw std::logic_error("modulus not coprime to element");
    return FqElem(ctx_, s.scaled(g.lc().inverse()));
}

FqElem FqElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem acc = one_like();
    FqElem base = *this;
    Int m = e;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

FqElem FqElem::zero_like() const { return FqElem(ctx_, Poly<FpElem>()); }
FqElem FqElem::one_like() const {
    return FqElem(ctx_, Poly<FpElem>::constant(FpElem(ctx_->p, 1)));
}

bool FqElem::operator==(const FqElem& o) const {
    common_ctx(*this, o);
    return rep_ == o.rep_;
}

FqElem fq_element(std::shared_ptr<const FqContext> ctx, const std::vector<long>& coeffs) {
    long p = ctx->p;
    return FqElem(std::move(ctx), fp_poly(p, coeffs));
}

FqElem fq_generator(std::shared_ptr<const FqContext> ctx) {
    long p = ctx->p;
    return FqElem(std::move(ctx), Poly<FpElem>::gen(FpElem(p, 0)));
}

FqElem fq_from_index(std::shared_ptr<const FqContext> ctx, long k) {
    std::vector<long> coeffs(static_cast<size_t>(ctx->degree), 0);
    for (int i = 0; i < ctx->degree; ++i) {
        coeffs[static_cast<size_t>(i)] = k % ctx->p;
        k /= ctx->p;
    }
    return fq_element(std::move(ctx), coeffs);
}

FqElem frobenius_residue(const FqElem& a) { return a.pow(Int(a.ctx().p)); }

namespace {

/// Root of the base modulus inside the target field, scanned in coordinate
/// order and cached per (p, base modulus, target modulus).
FqElem embedding_root(const std::shared_ptr<const FqContext>& base,
                      const std::shared_ptr<const FqContext>& target) {
    using Key = std::tuple<long, std::vector<long>, std::vector<long>>;
    static std::map<Key, std::vector<long>> cache;
    static std::mutex mtx;

    Key key{base->p, poly_key(base->modulus), poly_key(target->modulus)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return fq_element(target, it->second);
    }

    long total = 1;
    for (int i = 0; i < target->degree; ++i) total *= target->p;
    for (long k = 0; k < total; ++k) {
        FqElem cand = fq_from_index(target, k);
        // evaluate the base modulus at cand, coefficients lifted to the target
        FqElem acc = cand.zero_like();
        for (int i = base->modulus.degree(); i >= 0; --i) {
            acc = acc * cand;
            acc = acc + fq_element(target, {base->modulus[i].value()});
        }
        if (acc.is_zero()) {
            std::lock_guard<std::mutex> lock(mtx);
            cache[key] = cand.coords();
            return cand;
        }
    }
    throw std::logic_error("no root of base modulus in target field");
}

}  // namespace

FqElem embed_subfield(const FqElem& a, const std::shared_ptr<const FqContext>& target) {
    const auto& base = a.ctx_ptr();
    if (base->p != target->p) throw std::invalid_argument("incompatible tower: different characteristic");
    if (target->degree % base->degree != 0)
        throw std::invalid_argument("incompatible tower: base degree does not divide extension degree");
    FqElem root = embedding_root(base, target);
    FqElem acc = root.zero_like();
    for (int i = a.rep().degree(); i >= 0; --i) {
        acc = acc * root;
        acc = acc + fq_element(target, {a.rep()[i].value()});
    }
    return acc;
}

FqElem residue_norm(const FqElem& b, const std::shared_ptr<const FqContext>& base) {
    const FqContext& big = b.ctx();
    if (base->p != big.p) throw std::invalid_argument("incompatible tower: different characteristic");
    if (big.degree % base->degree != 0)
        throw std::invalid_argument("incompatible tower: base degree does not divide extension degree");
    if (b.is_zero()) return fq_element(base, {});
    Int q = int_pow(base->p, static_cast<unsigned>(base->degree));
    Int qn = int_pow(big.p, static_cast<unsigned>(big.degree));
    FqElem c = b.pow((qn - 1) / (q - 1));
    // c sits in the embedded copy of the base field; match its coordinates
    // against the embedded base elements (the base field is small by design)
    for (long k = 0; k < q.get_si(); ++k) {
        FqElem cand = fq_from_index(base, k);
        if (embed_subfield(cand, b.ctx_ptr()) == c) return cand;
    }
    throw std::logic_error("norm did not land in the base field");
}

FqElem residue_norm_preimage(const FqElem& a, const std::shared_ptr<const FqContext>& target) {
    if (a.is_zero()) throw std::invalid_argument("norm preimage of zero");
    const auto& base = a.ctx_ptr();
    if (target->degree % base->degree != 0)
        throw std::invalid_argument("incompatible tower: base degree does not divide extension degree");
    int n = target->degree / base->degree;
    Int q = int_pow(base->p, static_cast<unsigned>(base->degree));

    std::vector<int> maximal_divisors;
    for (long l : prime_divisors(Int(n))) maximal_divisors.push_back(n / static_cast<int>(l));

    long total = 1;
    for (int i = 0; i < target->degree; ++i) total *= target->p;
    for (long k = 1; k < total; ++k) {
        FqElem b = fq_from_index(target, k);
        if (b.is_zero()) continue;
        bool proper = false;
        for (int m : maximal_divisors) {
            Int qm;
            mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m));
            if (b.pow(qm) == b) {
                proper = true;  // lies in the subfield of q^m elements
                break;
            }
        }
        if (proper) continue;
        if (residue_norm(b, base) == a) return b;
    }
    throw std::logic_error("no norm preimage found");  // impossible: the norm is surjective
}

}  // namespace brauer

#include "torsearch/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace torsearch {

namespace {

constexpr std::uint64_t kTableCap = 1024; // tabulate extension fields up to this q

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomials over F_p, used only for the modulus search ---
using PVec = std::vector<std::uint64_t>; // little-endian, may carry trailing zeros

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, std::uint64_t p) {
    PVec r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic mod
    std::size_t dm = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > dm;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < dm; ++j) {
            std::uint64_t t = (c * mod[j]) % p;
            r[i - dm + j] = (r[i - dm + j] + p - t) % p;
        }
    }
    r.resize(dm);
    ptrim(r);
    return r;
}

PVec ppowmod(PVec base, std::uint64_t k, const PVec& mod, std::uint64_t p) {
    PVec r{1};
    while (k) {
        if (k & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        k >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b via schoolbook division (b need not be monic)
        std::uint64_t lead_inv = 1, acc = b.back() % p, e = p - 2;
        // inverse by Fermat
        std::uint64_t base = acc, res = 1;
        while (e) {
            if (e & 1) res = (res * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        lead_inv = res;
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = (a.back() * lead_inv) % p;
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = (c * b[j]) % p;
                a[off + j] = (a[off + j] + p - t) % p;
            }
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// irreducibility of monic f over F_p: x^{p^d} = x (mod f) and
// gcd(x^{p^{d/l}} - x, f) = 1 for every prime l | d
bool pirred(const PVec& f, std::uint64_t p) {
    std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    PVec x{0, 1};
    PVec h = x;
    std::vector<std::size_t> checkpoints;
    for (std::size_t l = 2; l <= d; ++l)
        if (d % l == 0) {
            bool lp = true;
            for (std::size_t m = 2; m * m <= l; ++m)
                if (l % m == 0) { lp = false; break; }
            if (lp) checkpoints.push_back(d / l);
        }
    std::sort(checkpoints.begin(), checkpoints.end());
    std::size_t step = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        h = ppowmod(h, p, f, p);
        ++step;
        if (std::binary_search(checkpoints.begin(), checkpoints.end(), step)) {
            PVec diff = h;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + p - 1) % p;
            ptrim(diff);
            PVec g = pgcd(diff, f, p);
            if (!(g.size() == 1)) return false;
        }
    }
    // h = x^{p^d} mod f must equal x
    PVec diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    return diff.empty();
}

// lexicographically least monic irreducible of degree e over F_p,
// coefficient vectors (c0, ..., c_{e-1}) compared constant term first
PVec canonical_modulus(std::uint64_t p, std::uint32_t e) {
    PVec f(e + 1, 0);
    f[e] = 1;
    std::vector<std::uint64_t> c(e, 0);
    for (;;) {
        for (std::uint32_t i = 0; i < e; ++i) f[i] = c[i];
        PVec g = f;
        if (pirred(g, p)) return f;
        // increment (c0 most significant): bump the last position first
        std::uint32_t i = e;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible modulus found"); // unreachable
        }
    }
}

} // namespace

FieldSpec::FieldSpec(std::uint64_t p, std::uint32_t e, std::vector<std::uint64_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (q_ > UINT64_MAX / p_) throw std::overflow_error("field cardinality exceeds 64 bits");
        q_ *= p_;
    }
    if (e_ >= 2 && q_ <= kTableCap) build_tables();
}

FieldSpecPtr FieldSpec::make(std::uint64_t p, std::uint32_t e) {
    if (e >= 2) {
        PVec m = canonical_modulus(p, e);
        return make_with_modulus(p, e, m);
    }
    return make_with_modulus(p, e, PVec{0, 1});
}

FieldSpecPtr FieldSpec::make_with_modulus(std::uint64_t p, std::uint32_t e,
                                          std::vector<std::uint64_t> modulus) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw std::invalid_argument("p must be an odd prime");
    if (p >= (1ull << 31)) throw std::invalid_argument("p must fit 31 bits");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus.size() != e + 1) throw std::invalid_argument("modulus must have degree e");
    for (auto& c : modulus) c %= p;
    if (modulus[e] != 1) throw std::invalid_argument("modulus must be monic");
    if (e >= 2 && !pirred(modulus, p)) throw std::invalid_argument("modulus is reducible");
    return FieldSpecPtr(new FieldSpec(p, e, std::move(modulus)));
}

bool FieldSpec::same(const FieldSpec& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

void FieldSpec::build_tables() {
    tabulated_ = true;
    add_tab_.resize(q_ * q_);
    mul_tab_.resize(q_ * q_);
    inv_tab_.assign(q_, 0);
    chi_tab_.assign(q_, -1);
    for (std::uint64_t a = 0; a < q_; ++a)
        for (std::uint64_t b = 0; b < q_; ++b) {
            add_tab_[a * q_ + b] = static_cast<std::uint32_t>(add_generic(a, b));
            mul_tab_[a * q_ + b] = static_cast<std::uint32_t>(mul_generic(a, b));
        }
    for (std::uint64_t a = 1; a < q_; ++a) {
        for (std::uint64_t b = 1; b < q_; ++b)
            if (mul_tab_[a * q_ + b] == 1) { inv_tab_[a] = static_cast<std::uint32_t>(b); break; }
        chi_tab_[mul_tab_[a * q_ + a]] = 1; // mark nonzero squares
    }
    chi_tab_[0] = 0;
}

std::uint64_t FieldSpec::add_generic(std::uint64_t a, std::uint64_t b) const {
    if (e_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (e_ == 1) return (a * b) % p_;
    std::uint64_t da[64], db[64];
    std::uint64_t prod[128] = {0};
    std::uint64_t t = a;
    for (std::uint32_t i = 0; i < e_; ++i) { da[i] = t % p_; t /= p_; }
    t = b;
    for (std::uint32_t i = 0; i < e_; ++i) { db[i] = t % p_; t /= p_; }
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (std::uint32_t i = 2 * e_ - 1; i-- > e_;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i - e_ + j] = (prod[i - e_ + j] + p_ - (c * modulus_[j]) % p_) % p_;
    }
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += prod[i] * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (tabulated_) return add_tab_[a * q_ + b];
    return add_generic(a, b);
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (e_ == 1) return a ? p_ - a : 0;
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint64_t d = a % p_;
        r += (d ? p_ - d : 0) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (tabulated_) return mul_tab_[a * q_ + b];
    return mul_generic(a, b);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    if (tabulated_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

std::uint64_t FieldSpec::pow(std::uint64_t a, u128 k) const {
    std::uint64_t r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

int FieldSpec::legendre(std::uint64_t a) const {
    if (a == 0) return 0;
    if (tabulated_) return chi_tab_[a];
    std::uint64_t r = pow(a, (q_ - 1) / 2);
    return r == 1 ? 1 : -1;
}

std::uint64_t FieldSpec::proot(std::uint64_t a) const {
    if (e_ == 1) return a; // Frobenius is the identity on F_p
    // a^(p^(e-1)) is the p-th root since a^(p^e) = a
    std::uint64_t r = a;
    for (std::uint32_t i = 0; i + 1 < e_; ++i) r = pow(r, p_);
    return r;
}

std::vector<std::uint64_t> FieldSpec::decode(std::uint64_t code) const {
    std::vector<std::uint64_t> v(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        v[i] = code % p_;
        code /= p_;
    }
    return v;
}

std::uint64_t FieldSpec::encode(const std::vector<std::int64_t>& residues) const {
    if (residues.size() > e_) throw std::invalid_argument("residue vector longer than extension degree");
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::int64_t v = i < residues.size() ? residues[i] : 0;
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        r += static_cast<std::uint64_t>(m) * mult;
        mult *= p_;
    }
    return r;
}

FieldElem::FieldElem(FieldSpecPtr spec, std::uint64_t code) : spec_(std::move(spec)), code_(code) {
    if (!spec_) throw std::invalid_argument("FieldElem requires a FieldSpec");
    if (code_ >= spec_->q()) throw std::invalid_argument("element code out of range");
}

FieldElem FieldElem::from_vector(const FieldSpecPtr& spec, const std::vector<std::int64_t>& residues) {
    return FieldElem(spec, spec->encode(residues));
}

FieldElem FieldElem::from_int(const FieldSpecPtr& spec, std::int64_t value) {
    return FieldElem(spec, spec->encode({value}));
}

std::vector<std::uint64_t> FieldElem::to_vector() const { return spec_->decode(code_); }

const FieldSpec& FieldElem::checked_pair(const FieldElem& o) const {
    if (!spec_ || !o.spec_) throw std::invalid_argument("operation on detached FieldElem");
    if (!spec_->same(*o.spec_)) throw std::invalid_argument("FieldSpec mismatch");
    return *spec_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    return FieldElem(spec_, checked_pair(o).add(code_, o.code_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    return FieldElem(spec_, checked_pair(o).sub(code_, o.code_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    return FieldElem(spec_, checked_pair(o).mul(code_, o.code_));
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    return FieldElem(spec_, checked_pair(o).div(code_, o.code_));
}
FieldElem FieldElem::operator-() const { return FieldElem(spec_, spec_->neg(code_)); }

bool FieldElem::operator==(const FieldElem& o) const {
    if (!spec_ && !o.spec_) return code_ == o.code_;
    return checked_pair(o), code_ == o.code_;
}

FieldElem FieldElem::inverse() const { return FieldElem(spec_, spec_->inv(code_)); }
FieldElem FieldElem::pow(u128 k) const { return FieldElem(spec_, spec_->pow(code_, k)); }
int FieldElem::legendre() const { return spec_->legendre(code_); }

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("power exceeds 64 bits");
        r *= base;
    }
    return r;
}

FieldSpecPtr field_for_cardinality(std::uint64_t q) {
    for (std::uint64_t p = 3; p * p <= q; p += 2) {
        if (q % p) continue;
        std::uint64_t n = q;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (n != 1) throw std::invalid_argument("q is not a prime power");
        return FieldSpec::make(p, e);
    }
    return FieldSpec::make(q, 1); // q itself prime (make() validates)
}

} // namespace torsearch

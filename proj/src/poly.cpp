#include "torsearch/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsearch {

const FieldSpec& Poly::fs() const {
    if (!spec_) throw std::invalid_argument("operation on detached Poly");
    return *spec_;
}

const FieldSpec& Poly::checked_pair(const Poly& o) const {
    const FieldSpec& s = fs();
    if (!o.spec_) throw std::invalid_argument("operation on detached Poly");
    if (!s.same(*o.spec_)) throw std::invalid_argument("FieldSpec mismatch");
    return s;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldSpecPtr spec, std::uint64_t code) {
    Poly r(std::move(spec));
    if (code >= r.fs().q()) throw std::invalid_argument("element code out of range");
    if (code) r.c_ = {code};
    return r;
}

Poly Poly::monomial(FieldSpecPtr spec, std::uint32_t degree, std::uint64_t code) {
    Poly r(std::move(spec));
    if (code >= r.fs().q()) throw std::invalid_argument("element code out of range");
    if (code) {
        r.c_.assign(degree + 1, 0);
        r.c_[degree] = code;
    }
    return r;
}

Poly Poly::from_codes(FieldSpecPtr spec, std::vector<std::uint64_t> codes) {
    Poly r(std::move(spec));
    for (auto c : codes)
        if (c >= r.fs().q()) throw std::invalid_argument("element code out of range");
    r.c_ = std::move(codes);
    r.trim();
    return r;
}

Poly Poly::from_ints(const FieldSpecPtr& spec, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::uint64_t> codes(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) codes[i] = spec->encode({coeffs[i]});
    return from_codes(spec, std::move(codes));
}

FieldElem Poly::leading() const { return FieldElem(spec_, leading_code()); }

std::uint64_t Poly::leading_code() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    const FieldSpec& s = checked_pair(o);
    Poly r(spec_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = s.add(coeff_code(i), o.coeff_code(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    const FieldSpec& s = checked_pair(o);
    Poly r(spec_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = s.sub(coeff_code(i), o.coeff_code(i));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const FieldSpec& s = checked_pair(o);
    if (is_zero() || o.is_zero()) return Poly(spec_);
    Poly r(spec_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j]) r.c_[i + j] = s.add(r.c_[i + j], s.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(spec_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fs().neg(c_[i]);
    return r;
}

Poly Poly::scaled(std::uint64_t code) const {
    const FieldSpec& s = fs();
    if (code == 0) return Poly(spec_);
    Poly r(spec_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = s.mul(c_[i], code);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(fs().inv(c_.back()));
}

Poly Poly::pow(std::uint32_t k) const {
    Poly r = one(spec_);
    Poly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Poly Poly::pow_mod(u128 k, const Poly& mod) const {
    Poly r = one(spec_) % mod;
    Poly b = *this % mod;
    while (k) {
        if (k & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        k >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
    const FieldSpec& s = checked_pair(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(spec_), r = *this;
    if (degree() < b.degree()) return {q, r};
    q.c_.assign(c_.size() - b.c_.size() + 1, 0);
    std::uint64_t lead_inv = s.inv(b.c_.back());
    while (!r.c_.empty() && r.c_.size() >= b.c_.size()) {
        std::uint64_t coef = s.mul(r.c_.back(), lead_inv);
        std::size_t off = r.c_.size() - b.c_.size();
        q.c_[off] = coef;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[off + j] = s.sub(r.c_[off + j], s.mul(coef, b.c_[j]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Poly Poly::derivative() const {
    const FieldSpec& s = fs();
    Poly r(spec_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        std::uint64_t k = s.encode({static_cast<std::int64_t>(i % s.p())});
        r.c_[i - 1] = s.mul(c_[i], k);
    }
    r.trim();
    return r;
}

Poly Poly::shifted_up(std::uint32_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(spec_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

std::uint64_t Poly::evaluate_code(std::uint64_t x) const {
    const FieldSpec& s = fs();
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = s.add(s.mul(acc, x), c_[i]);
    return acc;
}

FieldElem Poly::evaluate(const FieldElem& x) const {
    if (!fs().same(*x.spec())) throw std::invalid_argument("FieldSpec mismatch");
    return FieldElem(spec_, evaluate_code(x.code()));
}

bool Poly::operator==(const Poly& o) const {
    if (!spec_ && !o.spec_) return c_ == o.c_;
    checked_pair(o);
    return c_ == o.c_;
}

int Poly::cmp(const Poly& o) const {
    checked_pair(o);
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    return 0;
}

std::uint64_t Poly::stable_hash() const {
    std::uint64_t h = 1469598103934665603ull ^ (spec_ ? spec_->q() : 0);
    for (auto c : c_) {
        h ^= c + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const FieldSpec& s = fs();
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += "+";
        std::string coef;
        if (s.e() == 1) {
            coef = std::to_string(c_[i]);
        } else {
            auto v = s.decode(c_[i]);
            coef = "[";
            for (std::size_t j = 0; j < v.size(); ++j) coef += (j ? "," : "") + std::to_string(v[j]);
            coef += "]";
        }
        if (i == 0) {
            out += coef;
        } else {
            if (c_[i] != 1) out += coef + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

NormSgn norm_sgn(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("norm of the zero polynomial is undefined");
    return {checked_pow_u64(f.spec()->q(), static_cast<std::uint32_t>(f.degree())), f.leading()};
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    FieldSpecPtr spec = a.spec() ? a.spec() : b.spec();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(spec), s1 = Poly::zero(spec);
    Poly t0 = Poly::zero(spec), t1 = Poly::one(spec);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) throw std::domain_error("xgcd(0, 0) is undefined");
    std::uint64_t inv = spec->inv(r0.leading_code());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    XGcd g = xgcd(a % m, m);
    if (!g.g.is_one()) throw std::domain_error("inverse_mod: arguments are not coprime");
    return g.s % m;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("square-freeness of 0 is undefined");
    if (f.is_constant()) return true;
    Poly d = f.derivative();
    if (d.is_zero()) return false; // f = g^p
    return gcd_monic(f, d).is_one();
}

std::uint64_t monic_count(const FieldSpecPtr& spec, std::uint32_t D) {
    return checked_pow_u64(spec->q(), D);
}

Poly monic_by_index(const FieldSpecPtr& spec, std::uint32_t D, std::uint64_t index) {
    std::vector<std::uint64_t> codes(D + 1, 0);
    codes[D] = 1;
    std::uint64_t q = spec->q();
    for (std::uint32_t i = 0; i < D; ++i) {
        codes[i] = index % q;
        index /= q;
    }
    if (index) throw std::invalid_argument("monic index out of range");
    return Poly::from_codes(spec, std::move(codes));
}

namespace {

// odometer over the low D coefficient codes, constant term fastest
void enumerate_with_top(const FieldSpecPtr& spec, std::uint32_t D, std::uint64_t top,
                        std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(const Poly&)>& fn) {
    std::uint64_t q = spec->q();
    std::uint64_t total = checked_pow_u64(q, D);
    if (hi > total) throw std::invalid_argument("enumeration range out of bounds");
    if (lo >= hi) return;
    std::vector<std::uint64_t> codes(D + 1, 0);
    codes[D] = top;
    std::uint64_t idx = lo;
    for (std::uint32_t i = 0; i < D; ++i) {
        codes[i] = idx % q;
        idx /= q;
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
        fn(Poly::from_codes(spec, codes));
        for (std::uint32_t i = 0; i < D; ++i) {
            if (++codes[i] < q) break;
            codes[i] = 0;
        }
    }
}

} // namespace

void for_each_monic_in(const FieldSpecPtr& spec, std::uint32_t D, std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(const Poly&)>& fn) {
    enumerate_with_top(spec, D, 1, lo, hi, fn);
}

void for_each_monic(const FieldSpecPtr& spec, std::uint32_t D,
                    const std::function<void(const Poly&)>& fn) {
    for_each_monic_in(spec, D, 0, monic_count(spec, D), fn);
}

void for_each_residue(const FieldSpecPtr& spec, std::uint32_t D,
                      const std::function<void(const Poly&)>& fn) {
    enumerate_with_top(spec, D, 0, 0, checked_pow_u64(spec->q(), D), fn);
}

} // namespace torsearch

#include "torsearch/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsearch/factor.hpp"

namespace torsearch {

namespace {

constexpr std::uint64_t kExtTableCap = 1024;

// F_{q^i} as F_q[y]/(h), h the least monic irreducible of degree i in
// enumeration order. Element codes are base-q digit vectors; an F_q constant
// c embeds as the code c itself.
class ExtensionField {
public:
    ExtensionField(const FieldSpecPtr& base, std::uint32_t deg)
        : base_(base), deg_(deg), card_(checked_pow_u64(base->q(), deg)) {
        std::uint64_t total = monic_count(base, deg);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Poly cand = monic_by_index(base, deg, idx);
            if (is_irreducible(cand)) {
                modulus_ = cand;
                break;
            }
        }
        if (modulus_.is_zero()) throw std::logic_error("no irreducible modulus of requested degree");
        if (card_ <= kExtTableCap) {
            mul_tab_.resize(card_ * card_);
            for (std::uint64_t a = 0; a < card_; ++a)
                for (std::uint64_t b = a; b < card_; ++b) {
                    std::uint32_t m = static_cast<std::uint32_t>(mul_generic(a, b));
                    mul_tab_[a * card_ + b] = m;
                    mul_tab_[b * card_ + a] = m;
                }
        }
        chi_.assign(card_, -1);
        chi_[0] = 0;
        for (std::uint64_t v = 1; v < card_; ++v) chi_[mul(v, v)] = 1;
    }

    std::uint64_t cardinality() const { return card_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t q = base_->q(), r = 0, mult = 1;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            r += base_->add(a % q, b % q) * mult;
            a /= q;
            b /= q;
            mult *= q;
        }
        return r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (!mul_tab_.empty()) return mul_tab_[a * card_ + b];
        return mul_generic(a, b);
    }

    int chi(std::uint64_t a) const { return chi_[a]; }

private:
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const {
        Poly pa = decode(a), pb = decode(b);
        return encode((pa * pb) % modulus_);
    }
    Poly decode(std::uint64_t code) const {
        std::uint64_t q = base_->q();
        std::vector<std::uint64_t> cs(deg_);
        for (std::uint32_t i = 0; i < deg_; ++i) {
            cs[i] = code % q;
            code /= q;
        }
        return Poly::from_codes(base_, std::move(cs));
    }
    std::uint64_t encode(const Poly& p) const {
        std::uint64_t q = base_->q(), r = 0, mult = 1;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            r += p.coeff_code(i) * mult;
            mult *= q;
        }
        return r;
    }

    FieldSpecPtr base_;
    std::uint32_t deg_;
    std::uint64_t card_;
    Poly modulus_;
    std::vector<std::uint32_t> mul_tab_;
    std::vector<std::int8_t> chi_;
};

std::vector<std::pair<std::uint64_t, std::uint32_t>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void reduce_in_place(const Curve& C, Poly& u, Poly& v) {
    u = u.monic();
    v = v % u;
    while (u.degree() > static_cast<int>(C.genus())) {
        Poly u_next = (C.f() - v * v).exact_div(u).monic();
        Poly v_next = (-v) % u_next;
        u = std::move(u_next);
        v = std::move(v_next);
    }
}

} // namespace

Curve curve_from(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("curve_from: f must be nonzero");
    if (f.degree() < 3 || f.degree() % 2 == 0)
        throw std::invalid_argument("curve_from: deg f must be odd and >= 3");
    if (!is_squarefree(f)) throw std::invalid_argument("curve_from: f must be square-free");
    Curve c;
    auto data = std::make_shared<Curve::Data>();
    data->spec = f.spec();
    data->f = f;
    data->genus = static_cast<std::uint32_t>((f.degree() - 1) / 2);
    c.data_ = std::move(data);
    return c;
}

std::int64_t count_points(const Curve& curve, std::uint32_t i, Budget* budget) {
    if (i < 1) throw std::invalid_argument("count_points: extension degree must be >= 1");
    Budget local;
    Budget& bud = budget ? *budget : local;
    std::uint64_t card = checked_pow_u64(curve.spec()->q(), i);
    bud.charge(card, "count_points");

    ExtensionField E(curve.spec(), i);
    const Poly& f = curve.f();
    std::int64_t affine = 0;
    for (std::uint64_t x = 0; x < card; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t c = f.codes().size(); c-- > 0;)
            acc = E.add(E.mul(acc, x), f.coeff_code(c));
        affine += 1 + E.chi(acc);
    }
    return affine + 1; // one point at infinity (odd degree)
}

ClassGroupSummary l_polynomial(const Curve& curve, Budget* budget) {
    std::uint32_t g = curve.genus();
    std::uint64_t q = curve.spec()->q();
    ClassGroupSummary s;
    s.curve = curve;
    for (std::uint32_t i = 1; i <= g; ++i) s.point_counts.push_back(count_points(curve, i, budget));

    // traces S_i = N_i - q^i - 1; Newton: k a_k = sum_{i=1..k} S_i a_{k-i}
    std::vector<std::int64_t> S(g + 1, 0);
    for (std::uint32_t i = 1; i <= g; ++i)
        S[i] = s.point_counts[i - 1] - static_cast<std::int64_t>(checked_pow_u64(q, i)) - 1;
    std::vector<std::int64_t>& a = s.l_poly;
    a.assign(2 * g + 1, 0);
    a[0] = 1;
    for (std::uint32_t k = 1; k <= g; ++k) {
        std::int64_t acc = 0;
        for (std::uint32_t i = 1; i <= k; ++i) acc += S[i] * a[k - i];
        if (acc % static_cast<std::int64_t>(k))
            throw std::logic_error("l_polynomial: non-integer coefficient");
        a[k] = acc / static_cast<std::int64_t>(k);
    }
    for (std::uint32_t k = g + 1; k <= 2 * g; ++k)
        a[k] = static_cast<std::int64_t>(checked_pow_u64(q, k - g)) * a[2 * g - k];

    for (std::uint32_t i = 0; i <= g; ++i)
        if (a[2 * g - i] != static_cast<std::int64_t>(checked_pow_u64(q, g - i)) * a[i])
            throw std::logic_error("l_polynomial: functional equation violated");
    std::int64_t s1 = S[1];
    if (s1 * s1 > 4ll * g * g * static_cast<std::int64_t>(q))
        throw std::logic_error("l_polynomial: Weil bound violated");

    std::int64_t h = 0;
    for (auto c : a) h += c;
    if (h < 1) throw std::logic_error("l_polynomial: nonpositive class number");
    s.h = static_cast<std::uint64_t>(h);
    s.h_factored = trial_factor(s.h);
    return s;
}

MumfordDivisor::MumfordDivisor(Curve curve, Poly u, Poly v)
    : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)) {
    if (u_.is_zero() || !u_.is_monic()) throw std::invalid_argument("Mumford u must be monic");
    if (u_.degree() > static_cast<int>(curve_.genus()))
        throw std::invalid_argument("Mumford pair is not reduced");
    if (!v_.is_zero() && v_.degree() >= u_.degree())
        throw std::invalid_argument("Mumford v must satisfy deg v < deg u");
    if (!((v_ * v_ - curve_.f()) % u_).is_zero())
        throw std::invalid_argument("Mumford pair invalid: u does not divide v^2 - f");
}

MumfordDivisor MumfordDivisor::identity(const Curve& curve) {
    return MumfordDivisor(curve, Poly::one(curve.spec()), Poly::zero(curve.spec()));
}

bool MumfordDivisor::operator==(const MumfordDivisor& o) const {
    if (!curve_.same(o.curve_)) throw std::invalid_argument("divisors on different curves");
    return u_ == o.u_ && v_ == o.v_;
}

MumfordDivisor reduce_divisor(const Curve& curve, Poly u, Poly v) {
    if (u.is_zero()) throw std::invalid_argument("reduce_divisor: u must be nonzero");
    if (!((v * v - curve.f()) % u).is_zero())
        throw std::invalid_argument("reduce_divisor: u does not divide v^2 - f");
    reduce_in_place(curve, u, v);
    return MumfordDivisor(curve, std::move(u), std::move(v));
}

MumfordDivisor cantor_add(const MumfordDivisor& A, const MumfordDivisor& B) {
    if (!A.curve().same(B.curve())) throw std::invalid_argument("cantor_add: curve mismatch");
    const Curve& C = A.curve();
    const Poly &u1 = A.u(), &v1 = A.v(), &u2 = B.u(), &v2 = B.v();

    XGcd g1 = xgcd(u1, u2);                 // d1 = e1 u1 + e2 u2
    XGcd g2 = xgcd(g1.g, v1 + v2);          // d  = c1 d1 + c2 (v1 + v2)
    const Poly& d = g2.g;
    Poly s1 = g2.s * g1.s;
    Poly s2 = g2.s * g1.t;
    const Poly& s3 = g2.t;

    Poly u3 = (u1 * u2).exact_div(d * d);
    Poly num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + C.f());
    Poly v3 = num.exact_div(d) % u3;

    reduce_in_place(C, u3, v3);
    return MumfordDivisor(C, std::move(u3), std::move(v3));
}

MumfordDivisor cantor_neg(const MumfordDivisor& A) {
    return MumfordDivisor(A.curve(), A.u(), (-A.v()) % A.u());
}

MumfordDivisor scalar_mul(const MumfordDivisor& A, std::uint64_t k) {
    MumfordDivisor acc = MumfordDivisor::identity(A.curve());
    MumfordDivisor base = A;
    while (k) {
        if (k & 1) acc = cantor_add(acc, base);
        k >>= 1;
        if (k) base = cantor_add(base, base);
    }
    return acc;
}

std::uint64_t divisor_order(const MumfordDivisor& D, std::uint64_t h,
                            const std::vector<std::pair<std::uint64_t, std::uint32_t>>& h_factored) {
    if (!scalar_mul(D, h).is_identity())
        throw std::logic_error("divisor_order: h * D is not the identity");
    std::uint64_t e = h;
    for (const auto& [p, mult] : h_factored) {
        (void)mult;
        while (e % p == 0 && scalar_mul(D, e / p).is_identity()) e /= p;
    }
    return e;
}

std::uint64_t divisor_order(const MumfordDivisor& D, const ClassGroupSummary& summary) {
    return divisor_order(D, summary.h, summary.h_factored);
}

MumfordDivisor ideal_class_of(const Curve& curve, const SolutionTuple& sol) {
    if (!gcd_monic(sol.m, sol.t).is_one())
        throw std::invalid_argument("ideal_class_of: gcd(m, t) != 1 (malformed solution)");
    Poly t_inv = inverse_mod(sol.t % sol.m, sol.m);
    Poly v = (-(sol.n * t_inv)) % sol.m;
    // m | v^2 - f since v^2 - f = (n^2 - t^2 f)/t^2 = m^g / t^2 mod m
    return reduce_divisor(curve, sol.m, std::move(v));
}

OrderCertificate verify_order_g(const SolutionTuple& sol, std::uint32_t g, Budget* budget) {
    Curve curve = curve_from(sol.f);
    ClassGroupSummary summary = l_polynomial(curve, budget);
    MumfordDivisor D = ideal_class_of(curve, sol);
    std::uint64_t order = divisor_order(D, summary);
    return {sol.m, sol.n, sol.t, sol.f, summary.h, order, order == g};
}

std::uint64_t class_group_brute(const Curve& curve, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    const FieldSpecPtr& spec = curve.spec();
    std::uint64_t count = 1; // identity [1, 0]
    for (std::uint32_t d = 1; d <= curve.genus(); ++d) {
        bud.charge(checked_pow_u64(spec->q(), 2 * d), "class_group_brute");
        for_each_monic(spec, d, [&](const Poly& u) {
            for_each_residue(spec, d, [&](const Poly& v) {
                if (((v * v - curve.f()) % u).is_zero()) ++count;
            });
        });
    }
    return count;
}

} // namespace torsearch

#ifndef TORSEARCH_CURVE_HPP
#define TORSEARCH_CURVE_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "torsearch/budget.hpp"
#include "torsearch/poly.hpp"
#include "torsearch/search.hpp"

namespace torsearch {

/// Imaginary hyperelliptic model y^2 = f(x), f square-free of odd degree
/// L >= 3 over odd q; genus (L-1)/2. f is used as given (sgn may be -1).
class Curve {
public:
    Curve() = default;
    const FieldSpecPtr& spec() const { return data_->spec; }
    const Poly& f() const { return data_->f; }
    std::uint32_t genus() const { return data_->genus; }
    bool same(const Curve& o) const { return data_ == o.data_ || data_->f == o.data_->f; }

private:
    friend Curve curve_from(const Poly& f);
    struct Data {
        FieldSpecPtr spec;
        Poly f;
        std::uint32_t genus;
    };
    std::shared_ptr<const Data> data_;
};

Curve curve_from(const Poly& f);

/// #C(F_{q^i}) including the single point at infinity:
/// N_i = 1 + sum_{x in F_{q^i}} (1 + chi(f(x))), chi the quadratic character.
std::int64_t count_points(const Curve& curve, std::uint32_t i, Budget* budget = nullptr);

/// L-polynomial P(T) = sum a_i T^i reconstructed from N_1..N_genus by the
/// Newton recurrence plus the functional equation a_{2g-i} = q^{g-i} a_i;
/// class number h = P(1). Non-integer coefficients are a hard error.
struct ClassGroupSummary {
    Curve curve;
    std::vector<std::int64_t> point_counts; // N_1..N_genus
    std::vector<std::int64_t> l_poly;       // a_0..a_{2 genus}
    std::uint64_t h;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> h_factored;
};
ClassGroupSummary l_polynomial(const Curve& curve, Budget* budget = nullptr);

/// Reduced Mumford pair [u, v]: u monic, deg v < deg u <= genus, u | v^2 - f.
/// [1, 0] is the identity class.
class MumfordDivisor {
public:
    MumfordDivisor(Curve curve, Poly u, Poly v); // validates the reduced form
    static MumfordDivisor identity(const Curve& curve);

    const Curve& curve() const { return curve_; }
    const Poly& u() const { return u_; }
    const Poly& v() const { return v_; }
    bool is_identity() const { return u_.is_one(); }

    bool operator==(const MumfordDivisor& o) const;
    bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }

private:
    Curve curve_;
    Poly u_, v_;
};

/// normalize (monic u, v mod u) and Cantor-reduce down to deg u <= genus.
MumfordDivisor reduce_divisor(const Curve& curve, Poly u, Poly v);

/// Cantor composition + reduction; the group law of the ideal class group.
MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor cantor_neg(const MumfordDivisor& a);
MumfordDivisor scalar_mul(const MumfordDivisor& a, std::uint64_t k);

/// exact order of D given the factored group order; requires h * D = identity.
std::uint64_t divisor_order(const MumfordDivisor& D, std::uint64_t h,
                            const std::vector<std::pair<std::uint64_t, std::uint32_t>>& h_factored);
std::uint64_t divisor_order(const MumfordDivisor& D, const ClassGroupSummary& summary);

/// class of the ideal (m, n t^{-1} + sqrt(f)-part): the reduction of
/// [m, (-n t^{-1}) mod m]. Requires gcd(m, t) = 1.
MumfordDivisor ideal_class_of(const Curve& curve, const SolutionTuple& sol);

struct OrderCertificate {
    Poly m, n, t, f;
    std::uint64_t h;
    std::uint64_t order;
    bool pass; // order == g exactly
};

OrderCertificate verify_order_g(const SolutionTuple& sol, std::uint32_t g, Budget* budget = nullptr);

/// independent oracle: count all reduced pairs [u, v]; equals h for the
/// imaginary model.
std::uint64_t class_group_brute(const Curve& curve, Budget* budget = nullptr);

} // namespace torsearch

#endif

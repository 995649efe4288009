#ifndef TORSEARCH_POLY_HPP
#define TORSEARCH_POLY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "torsearch/field.hpp"

namespace torsearch {

/// Dense polynomial over F_q. Coefficient i is the coefficient of x^i, stored
/// as an element code; the top stored coefficient is nonzero (canonical form).
/// The zero polynomial is the empty vector and reports degree() == -1, the
/// stand-in for deg 0 = -infinity.
class Poly {
public:
    Poly() = default; // detached; usable only as a container placeholder
    explicit Poly(FieldSpecPtr spec) : spec_(std::move(spec)) {}

    static Poly zero(FieldSpecPtr spec) { return Poly(std::move(spec)); }
    static Poly one(const FieldSpecPtr& spec) { return constant(spec, 1); }
    static Poly x(const FieldSpecPtr& spec) { return monomial(spec, 1); }
    static Poly constant(FieldSpecPtr spec, std::uint64_t code);
    static Poly monomial(FieldSpecPtr spec, std::uint32_t degree, std::uint64_t code = 1);
    static Poly from_codes(FieldSpecPtr spec, std::vector<std::uint64_t> codes);
    /// little-endian integer coefficients; entries are reduced into F_p and
    /// placed in the constant residue slot (exact for e = 1)
    static Poly from_ints(const FieldSpecPtr& spec, const std::vector<std::int64_t>& coeffs);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::uint64_t>& codes() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::uint64_t coeff_code(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElem coeff(std::size_t i) const { return FieldElem(spec_, coeff_code(i)); }
    FieldElem leading() const;
    std::uint64_t leading_code() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(std::uint64_t code) const; // multiply by a constant
    Poly monic() const;                    // divide by the leading coefficient
    Poly pow(std::uint32_t k) const;
    Poly pow_mod(u128 k, const Poly& mod) const;

    /// quotient/remainder with deg r < deg b; throws on b = 0
    std::pair<Poly, Poly> divmod(const Poly& b) const;
    Poly operator/(const Poly& b) const { return divmod(b).first; }
    Poly operator%(const Poly& b) const { return divmod(b).second; }
    /// quotient when the division is known exact; throws std::logic_error otherwise
    Poly exact_div(const Poly& b) const;

    Poly derivative() const;
    Poly shifted_up(std::uint32_t k) const; // * x^k
    std::uint64_t evaluate_code(std::uint64_t x) const;
    FieldElem evaluate(const FieldElem& x) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// total order: by degree, then coefficients compared from x^deg down to
    /// the constant term. Matches the monic enumeration order.
    int cmp(const Poly& o) const;
    bool operator<(const Poly& o) const { return cmp(o) < 0; }

    std::uint64_t stable_hash() const;
    std::string to_string() const; // human-readable, e.g. "4*x^3+x^2+2*x+1"

private:
    const FieldSpec& fs() const;
    const FieldSpec& checked_pair(const Poly& o) const;
    void trim();

    FieldSpecPtr spec_;
    std::vector<std::uint64_t> c_;
};

struct NormSgn {
    std::uint64_t norm; // q^deg
    FieldElem sgn;      // leading coefficient
};

/// norm |f| = q^deg f and leading coefficient; throws on f = 0.
NormSgn norm_sgn(const Poly& f);

/// greatest common monic divisor; throws if both inputs are zero.
Poly gcd_monic(const Poly& a, const Poly& b);

struct XGcd {
    Poly g, s, t; // g = s*a + t*b, g monic (or zero)
};
XGcd xgcd(const Poly& a, const Poly& b);

/// inverse of a modulo m (gcd(a, m) = 1); throws std::domain_error otherwise.
Poly inverse_mod(const Poly& a, const Poly& m);

/// true iff gcd(f, f') = 1; a nonconstant polynomial with vanishing
/// derivative is a p-th power and reports false. Throws on f = 0.
bool is_squarefree(const Poly& f);

/// number of monic polynomials of degree D (q^D, checked).
std::uint64_t monic_count(const FieldSpecPtr& spec, std::uint32_t D);

/// index -> monic polynomial of degree D; index digit i (base q) is the
/// code of the coefficient of x^i, so the constant term varies fastest.
Poly monic_by_index(const FieldSpecPtr& spec, std::uint32_t D, std::uint64_t index);

/// visit monic polynomials of degree D with index in [lo, hi) in order.
void for_each_monic_in(const FieldSpecPtr& spec, std::uint32_t D, std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(const Poly&)>& fn);
void for_each_monic(const FieldSpecPtr& spec, std::uint32_t D,
                    const std::function<void(const Poly&)>& fn);

/// visit all q^D polynomials of degree < D (residues mod a degree-D modulus).
void for_each_residue(const FieldSpecPtr& spec, std::uint32_t D,
                      const std::function<void(const Poly&)>& fn);

} // namespace torsearch

#endif

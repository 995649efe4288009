#ifndef TORSEARCH_FIELD_HPP
#define TORSEARCH_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace torsearch {

using u128 = unsigned __int128;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// F_q with q = p^e, p an odd prime, e >= 1. Elements are residue vectors of
/// length e over F_p packed into a single code word, code = sum c_i * p^i.
///
/// For e >= 2 arithmetic is modulo a monic irreducible polynomial over F_p.
/// The default modulus is the lexicographically least monic irreducible of
/// degree e, coefficient vectors compared constant term first; pass an
/// explicit modulus (e.g. a Conway polynomial) to override.
class FieldSpec {
public:
    static FieldSpecPtr make(std::uint64_t p, std::uint32_t e = 1);
    static FieldSpecPtr make_with_modulus(std::uint64_t p, std::uint32_t e,
                                          std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    /// length e+1, constant term first, monic; {0, 1} when e = 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool same(const FieldSpec& other) const;

    // arithmetic on element codes (each in [0, q))
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, u128 k) const;

    /// Quadratic character: 0 iff a = 0, +1 for nonzero squares, -1 otherwise.
    int legendre(std::uint64_t a) const;

    /// p-th root (inverse Frobenius); total on F_q.
    std::uint64_t proot(std::uint64_t a) const;

    std::vector<std::uint64_t> decode(std::uint64_t code) const;
    std::uint64_t encode(const std::vector<std::int64_t>& residues) const;

private:
    FieldSpec(std::uint64_t p, std::uint32_t e, std::vector<std::uint64_t> modulus);
    void build_tables();
    std::uint64_t add_generic(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    bool tabulated_ = false;
    std::vector<std::uint32_t> add_tab_, mul_tab_, inv_tab_;
    std::vector<std::int8_t> chi_tab_;
};

/// An element of F_q tied to its FieldSpec. Immutable value type; operations
/// between elements of different fields throw std::invalid_argument.
class FieldElem {
public:
    FieldElem() = default; // detached zero; attach a spec before use
    FieldElem(FieldSpecPtr spec, std::uint64_t code);

    static FieldElem from_vector(const FieldSpecPtr& spec, const std::vector<std::int64_t>& residues);
    static FieldElem from_int(const FieldSpecPtr& spec, std::int64_t value);

    const FieldSpecPtr& spec() const { return spec_; }
    std::uint64_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }
    std::vector<std::uint64_t> to_vector() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(u128 k) const;
    int legendre() const;

private:
    const FieldSpec& checked_pair(const FieldElem& o) const;

    FieldSpecPtr spec_;
    std::uint64_t code_ = 0;
};

/// q^exp as a checked 64-bit integer; throws std::overflow_error.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp);

/// Resolve a prime power q = p^e to its field (canonical modulus for e >= 2);
/// throws if q is not an odd prime power.
FieldSpecPtr field_for_cardinality(std::uint64_t q);

} // namespace torsearch

#endif

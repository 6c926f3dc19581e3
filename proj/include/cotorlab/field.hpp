#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cotorlab {

/// Thrown for malformed arguments: dimension mismatches, composite moduli,
/// unparsable scalars, inconsistent references.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An exact element of F_p or Q.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills into a shared immutable GMP rational. F_p values
/// are always inline canonical representatives in [0, p). Scalars carry no
/// field tag: all arithmetic goes through a Field.
class Scalar {
  public:
    Scalar() = default;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

    /// Exact value as a GMP rational (for F_p: the representative in [0, p)).
    mpq_class to_mpq() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  private:
    friend class Field;
    Scalar(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

/// Descriptor of the ground field: F_p for a prime p < 2^31, or Q.
class Field {
  public:
    enum class Kind { prime, rational };

    /// Throws InputError if p is not a prime in [2, 2^31).
    static Field prime(std::int64_t p);
    static Field rationals();

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    /// p for F_p, 0 for Q.
    std::int64_t characteristic() const { return p_; }

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return Scalar{1, 1}; }
    Scalar from_int(std::int64_t v) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;
    Scalar from_mpq(const mpq_class& q) const;
    /// Accepts "a", "-a", "a/b". Over F_p a fraction means a * b^{-1}.
    Scalar parse(const std::string& text) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    /// (-1)^k
    Scalar sign(long long k) const { return (k % 2 == 0) ? one() : neg(one()); }

    std::string to_string(const Scalar& a) const;
    /// "F_p" or "Q"
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Scalar normalize(const mpq_class& q) const;
    Scalar reduce_mod(const mpz_class& z) const;

    Kind kind_;
    std::int64_t p_;
};

}  // namespace cotorlab

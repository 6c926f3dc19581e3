#include "cotorlab/field.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace cotorlab {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

bool is_prime_number(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    base %= p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num_);
    mpz_set_si(q.get_den_mpz_t(), den_);
    return q;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: values that fit are always inline
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime_number(p))
        throw InputError("field characteristic " + std::to_string(p) +
                         " is not a prime below 2^31");
    return Field(Kind::prime, p);
}

Field Field::rationals() { return Field(Kind::rational, 0); }

std::string Field::name() const {
    return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

Scalar Field::reduce_mod(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Scalar{r.get_si(), 1};
}

Scalar Field::normalize(const mpq_class& q_in) const {
    mpq_class q = q_in;
    q.canonicalize();
    if (is_prime()) {
        Scalar num = reduce_mod(q.get_num());
        Scalar den = reduce_mod(q.get_den());
        if (den.is_zero())
            throw InputError("denominator divisible by the characteristic " +
                             std::to_string(p_));
        return mul(num, inv(den));
    }
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
        return Scalar{q.get_num().get_si(), q.get_den().get_si()};
    Scalar s;
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Field::from_int(std::int64_t v) const {
    if (is_prime()) {
        std::int64_t r = v % p_;
        if (r < 0) r += p_;
        return Scalar{r, 1};
    }
    return Scalar{v, 1};
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw InputError("zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    return normalize(q);
}

Scalar Field::from_mpq(const mpq_class& q) const { return normalize(q); }

Scalar Field::parse(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw InputError("empty scalar");
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    auto valid = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw InputError("cannot parse scalar '" + text + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    return normalize(mpq_class(n, d));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (is_prime()) {
        std::int64_t s = a.num_ + b.num_;
        if (s >= p_) s -= p_;
        return Scalar{s, 1};
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Scalar{s, 1};
        }
        i128 x = i128(a.num_) * b.den_;
        i128 y = i128(b.num_) * a.den_;
        i128 n;
        if (!__builtin_add_overflow(x, y, &n)) {
            i128 d = i128(a.den_) * b.den_;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (n == 0) return Scalar{};
            if (fits64(n) && fits64(d)) return Scalar{std::int64_t(n), std::int64_t(d)};
        }
    }
    return normalize(a.to_mpq() + b.to_mpq());
}

Scalar Field::neg(const Scalar& a) const {
    if (is_prime()) return Scalar{a.num_ == 0 ? 0 : p_ - a.num_, 1};
    if (!a.big_ && a.num_ != std::numeric_limits<std::int64_t>::min())
        return Scalar{-a.num_, a.den_};
    return normalize(-a.to_mpq());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (is_prime()) return Scalar{a.num_ * b.num_ % p_, 1};
    if (a.is_zero() || b.is_zero()) return Scalar{};
    if (!a.big_ && !b.big_) {
        i128 n = i128(a.num_) * b.num_;
        i128 d = i128(a.den_) * b.den_;
        if (d != 1) {
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        if (fits64(n) && fits64(d)) return Scalar{std::int64_t(n), std::int64_t(d)};
    }
    return normalize(a.to_mpq() * b.to_mpq());
}

Scalar Field::inv(const Scalar& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (is_prime()) return Scalar{mod_pow(a.num_, p_ - 2, p_), 1};
    if (!a.big_ && a.num_ != std::numeric_limits<std::int64_t>::min())
        return a.num_ > 0 ? Scalar{a.den_, a.num_} : Scalar{-a.den_, -a.num_};
    return normalize(1 / a.to_mpq());
}

std::string Field::to_string(const Scalar& a) const {
    if (!a.big_) {
        if (a.den_ == 1) return std::to_string(a.num_);
        return std::to_string(a.num_) + "/" + std::to_string(a.den_);
    }
    return a.big_->get_str();
}

}  // namespace cotorlab

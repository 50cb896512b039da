#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace stresslab {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Coefficient field: the rationals, or a prime field of odd order p > 2^20.
class Field {
public:
    enum class Kind { rational, prime };

    static Field rationals() { return Field(Kind::rational, 0); }

    static Field prime(std::uint64_t p) {
        if (p <= (std::uint64_t{1} << 20))
            throw field_error("prime field order must exceed 2^20");
        if ((p & 1) == 0 || !is_prime_u64(p))
            throw field_error("field order must be an odd prime");
        return Field(Kind::prime, p);
    }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const {
        return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
    }

    static Field parse(std::string_view s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.substr(0, 3) == "fp:") {
            return prime(std::stoull(std::string(s.substr(3))));
        }
        throw field_error("unknown field spec: " + std::string(s));
    }

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw field_error("mixed-field operands: " + a.str() + " vs " + b.str());
}

// Exact field element. Rational values are arbitrary-precision (GMP);
// prime-field values are reduced residues mod p.
class Scalar {
public:
    Scalar() : f_(Field::rationals()), q_(0), v_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return integer(f, 1); }

    static Scalar integer(const Field& f, long long n) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = mpq_class(static_cast<long>(n));
        } else {
            long long r = n % static_cast<long long>(f.modulus());
            if (r < 0) r += static_cast<long long>(f.modulus());
            s.v_ = static_cast<std::uint64_t>(r);
        }
        return s;
    }

    static Scalar rational(long long num, long long den) {
        if (den == 0) throw field_error("zero denominator");
        Scalar s(Field::rationals());
        s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        s.q_.canonicalize();
        return s;
    }

    static Scalar of_mpq(mpq_class q) {
        Scalar s(Field::rationals());
        q.canonicalize();
        s.q_ = std::move(q);
        return s;
    }

    static Scalar of_fp(const Field& f, std::uint64_t v) {
        if (!f.is_prime()) throw field_error("of_fp needs a prime field");
        Scalar s(f);
        s.v_ = v % f.modulus();
        return s;
    }

    // Accepts "n", "-n" or "p/q".
    static Scalar parse(const Field& f, std::string_view text) {
        std::string t(text);
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw field_error("bad scalar literal: " + t);
        q.canonicalize();
        if (f.is_rational()) return of_mpq(std::move(q));
        return reduce_mod(of_mpq(std::move(q)), f);
    }

    // Reduction of a rational value into F_p; the denominator must be a unit.
    static Scalar reduce_mod(const Scalar& x, const Field& f) {
        if (!x.field().is_rational() || !f.is_prime())
            throw field_error("reduce_mod maps rationals into a prime field");
        mpz_class p(static_cast<unsigned long>(f.modulus()));
        mpz_class num = x.q_.get_num() % p;
        mpz_class den = x.q_.get_den() % p;
        if (den == 0) throw field_error("denominator vanishes mod p; resample the prime");
        if (num < 0) num += p;
        Scalar d = of_fp(f, den.get_ui());
        return of_fp(f, num.get_ui()) / d;
    }

    const Field& field() const { return f_; }

    bool is_zero() const { return f_.is_rational() ? sgn(q_) == 0 : v_ == 0; }
    bool is_one() const { return f_.is_rational() ? q_ == 1 : v_ == 1; }

    // sign of a rational value (prime fields are unordered)
    int sign() const {
        if (!f_.is_rational()) throw field_error("sign undefined over a prime field");
        return sgn(q_);
    }

    const mpq_class& mpq() const {
        if (!f_.is_rational()) throw field_error("not a rational value");
        return q_;
    }

    std::uint64_t fp() const {
        if (!f_.is_prime()) throw field_error("not a prime-field value");
        return v_;
    }

    double to_double() const {
        return f_.is_rational() ? q_.get_d() : static_cast<double>(v_);
    }

    Scalar operator-() const {
        Scalar r(*this);
        if (f_.is_rational()) r.q_ = -r.q_;
        else if (r.v_ != 0) r.v_ = f_.modulus() - r.v_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        require_same_field(f_, o.f_);
        if (f_.is_rational()) q_ += o.q_;
        else {
            v_ += o.v_;
            if (v_ >= f_.modulus()) v_ -= f_.modulus();
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += (-o); }
    Scalar& operator*=(const Scalar& o) {
        require_same_field(f_, o.f_);
        if (f_.is_rational()) q_ *= o.q_;
        else v_ = detail::mulmod_u64(v_, o.v_, f_.modulus());
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inv() const {
        if (is_zero()) throw field_error("division by zero");
        Scalar r(f_);
        if (f_.is_rational()) {
            r.q_ = 1 / q_;
        } else {
            // extended Euclid on (v, p)
            std::int64_t t = 0, newt = 1;
            std::int64_t rr = static_cast<std::int64_t>(f_.modulus());
            std::int64_t newr = static_cast<std::int64_t>(v_);
            while (newr != 0) {
                std::int64_t qt = rr / newr;
                t = std::exchange(newt, t - qt * newt);
                rr = std::exchange(newr, rr - qt * newr);
            }
            if (t < 0) t += static_cast<std::int64_t>(f_.modulus());
            r.v_ = static_cast<std::uint64_t>(t);
        }
        return r;
    }

    bool operator==(const Scalar& o) const {
        require_same_field(f_, o.f_);
        return f_.is_rational() ? q_ == o.q_ : v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        return f_.is_rational() ? q_.get_str() : std::to_string(v_);
    }

private:
    explicit Scalar(const Field& f) : f_(f), q_(0), v_(0) {}

    Field f_;
    mpq_class q_;
    std::uint64_t v_;
};

} // namespace stresslab

#pragma once

// Exact field arithmetic for the three coefficient domains used throughout:
// odd prime fields F_p, their quadratic extensions F_{p^2}, and the rationals.
// All arithmetic is exact; there is no floating point anywhere in this library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liesym {

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

enum class FieldKind { Prime, PrimeSquare, Rational };

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long pow_mod_ll(long long base, long long exp, long long m) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = static_cast<unsigned long long>(((base % m) + m) % m);
    while (exp > 0) {
        if (exp & 1) acc = (acc * b) % static_cast<unsigned long long>(m);
        b = (b * b) % static_cast<unsigned long long>(m);
        exp >>= 1;
    }
    return static_cast<long long>(acc);
}

/// Euler criterion: 1 if a is a nonzero square mod p, -1 if a nonsquare, 0 if a == 0.
inline int legendre_symbol(long long a, long long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    long long r = pow_mod_ll(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

/// Smallest positive quadratic non-residue mod p (deterministic).
inline long long smallest_nonresidue(long long p) {
    for (long long a = 2; a < p; ++a)
        if (legendre_symbol(a, p) == -1) return a;
    throw std::logic_error("no quadratic non-residue found; p is not an odd prime");
}

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    long long p = 0;          // modulus for Prime / PrimeSquare
    long long nonsquare = 0;  // t^2 = nonsquare for PrimeSquare

    static FieldSpec prime(long long p) {
        if (p == 2 || !is_prime_ll(p))
            throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(p));
        FieldSpec s;
        s.kind = FieldKind::Prime;
        s.p = p;
        return s;
    }

    static FieldSpec prime_square(long long p, long long ns) {
        if (p == 2 || !is_prime_ll(p))
            throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(p));
        if (legendre_symbol(ns, p) != -1)
            throw std::invalid_argument("extension constant " + std::to_string(ns) +
                                        " is a square mod " + std::to_string(p));
        FieldSpec s;
        s.kind = FieldKind::PrimeSquare;
        s.p = p;
        s.nonsquare = ((ns % p) + p) % p;
        return s;
    }

    static FieldSpec rational() { return FieldSpec{}; }

    bool operator==(const FieldSpec&) const = default;

    bool finite() const { return kind != FieldKind::Rational; }

    /// Number of elements; only valid for finite kinds.
    long long order() const {
        switch (kind) {
            case FieldKind::Prime: return p;
            case FieldKind::PrimeSquare: return p * p;
            default: throw std::logic_error("rational field has no order");
        }
    }

    std::string name() const {
        switch (kind) {
            case FieldKind::Prime: return "F" + std::to_string(p);
            case FieldKind::PrimeSquare: return "F" + std::to_string(p) + "^2";
            default: return "Q";
        }
    }
};

/// Quadratic extension F_p -> F_{p^2}, with the smallest non-residue as t^2.
inline FieldSpec quadratic_extension(const FieldSpec& f) {
    if (f.kind != FieldKind::Prime)
        throw std::invalid_argument("unsupported extension: base field must be a prime field");
    return FieldSpec::prime_square(f.p, smallest_nonresidue(f.p));
}

// ---------------------------------------------------------------------------
// F_p elements
//
// An element carries its modulus. Modulus 0 marks an "unbound" integer literal
// (produced by Scalar(0), Scalar(1), ... inside Eigen kernels); it binds to the
// modulus of the first bound operand it meets.
// ---------------------------------------------------------------------------

class Fp {
  public:
    Fp() : v_(0), m_(0) {}
    Fp(long long v) : v_(v), m_(0) {}
    Fp(long long v, long long m) : v_(((v % m) + m) % m), m_(m) {}

    long long value() const { return v_; }
    long long modulus() const { return m_; }
    bool bound() const { return m_ != 0; }

    bool is_zero() const { return v_ == 0; }

    Fp bind(long long m) const {
        if (m_ != 0 || m == 0) return *this;
        return Fp(v_, m);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long m = merge(a, b);
        if (m == 0) return Fp(a.v_ + b.v_);
        return Fp(a.bind(m).v_ + b.bind(m).v_, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long m = merge(a, b);
        if (m == 0) return Fp(a.v_ - b.v_);
        return Fp(a.bind(m).v_ - b.bind(m).v_, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long m = merge(a, b);
        if (m == 0) return Fp(a.v_ * b.v_);
        __int128 prod = static_cast<__int128>(a.bind(m).v_) * b.bind(m).v_;
        return Fp(static_cast<long long>(prod % m), m);
    }
    Fp operator-() const { return m_ ? Fp(-v_, m_) : Fp(-v_); }

    Fp inv() const {
        if (m_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("cannot invert unbound integer literal");
        }
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        long long t = 0, nt = 1, r = m_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return Fp(t, m_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.bind(merge(a, b)).inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        long long m = merge(a, b);
        if (m == 0) return a.v_ == b.v_;
        return a.bind(m).v_ == b.bind(m).v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    /// Arbitrary total order, used only for canonical keys and containers.
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

  private:
    static long long merge(const Fp& a, const Fp& b) {
        if (a.m_ != 0 && b.m_ != 0 && a.m_ != b.m_)
            throw std::invalid_argument("field mismatch: F_" + std::to_string(a.m_) +
                                        " vs F_" + std::to_string(b.m_));
        return a.m_ != 0 ? a.m_ : b.m_;
    }

    long long v_;
    long long m_;
};

// ---------------------------------------------------------------------------
// F_{p^2} elements: a + b t with t^2 = nonsquare.
// ---------------------------------------------------------------------------

class Fp2 {
  public:
    Fp2() : a_(0), b_(0), m_(0), ns_(0) {}
    Fp2(long long a) : a_(a), b_(0), m_(0), ns_(0) {}
    Fp2(long long a, long long b, long long m, long long ns)
        : a_(((a % m) + m) % m), b_(((b % m) + m) % m), m_(m), ns_(((ns % m) + m) % m) {}
    Fp2(const Fp& a, const Fp& b, long long ns)
        : Fp2(a.value(), b.value(), a.modulus(), ns) {}

    static Fp2 embed(const Fp& x, long long ns) { return Fp2(x.value(), 0, x.modulus(), ns); }
    /// The generator t with t^2 = nonsquare.
    static Fp2 generator(const FieldSpec& s) { return Fp2(0, 1, s.p, s.nonsquare); }

    long long re() const { return a_; }
    long long im() const { return b_; }
    long long modulus() const { return m_; }
    long long nonsquare() const { return ns_; }
    bool bound() const { return m_ != 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_base_field() const { return b_ == 0; }

    Fp2 bind(long long m, long long ns) const {
        if (m_ != 0 || m == 0) return *this;
        return Fp2(a_, 0, m, ns);
    }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) {
        auto [m, ns] = merge(x, y);
        if (m == 0) return Fp2(x.a_ + y.a_);
        Fp2 a = x.bind(m, ns), b = y.bind(m, ns);
        return Fp2(a.a_ + b.a_, a.b_ + b.b_, m, ns);
    }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) {
        auto [m, ns] = merge(x, y);
        if (m == 0) return Fp2(x.a_ - y.a_);
        Fp2 a = x.bind(m, ns), b = y.bind(m, ns);
        return Fp2(a.a_ - b.a_, a.b_ - b.b_, m, ns);
    }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        auto [m, ns] = merge(x, y);
        if (m == 0) return Fp2(x.a_ * y.a_);
        Fp2 a = x.bind(m, ns), b = y.bind(m, ns);
        __int128 re = (__int128)a.a_ * b.a_ + (__int128)a.b_ * b.b_ % m * ns;
        __int128 im = (__int128)a.a_ * b.b_ + (__int128)a.b_ * b.a_;
        return Fp2(static_cast<long long>(re % m), static_cast<long long>(im % m), m, ns);
    }
    Fp2 operator-() const { return m_ ? Fp2(-a_, -b_, m_, ns_) : Fp2(-a_); }

    Fp2 inv() const {
        if (m_ == 0) {
            if (a_ == 1 || a_ == -1) return *this;
            throw std::domain_error("cannot invert unbound integer literal");
        }
        if (is_zero()) throw std::domain_error("division by zero in F_{p^2}");
        // (a + bt)^-1 = (a - bt) / (a^2 - ns b^2); the norm is nonzero since t^2 is a non-residue.
        Fp a(a_, m_), b(b_, m_), ns(ns_, m_);
        Fp norm = a * a - ns * b * b;
        Fp ninv = norm.inv();
        return Fp2((a * ninv).value(), ((-b) * ninv).value(), m_, ns_);
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) {
        auto [m, ns] = merge(x, y);
        return x * y.bind(m, ns).inv();
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }
    Fp2& operator/=(const Fp2& o) { return *this = *this / o; }

    friend bool operator==(const Fp2& x, const Fp2& y) {
        auto [m, ns] = merge(x, y);
        if (m == 0) return x.a_ == y.a_;
        Fp2 a = x.bind(m, ns), b = y.bind(m, ns);
        return a.a_ == b.a_ && a.b_ == b.b_;
    }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }
    friend bool operator<(const Fp2& x, const Fp2& y) {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp2& x) {
        if (x.b_ == 0) return os << x.a_;
        return os << x.a_ << "+" << x.b_ << "t";
    }

  private:
    static std::pair<long long, long long> merge(const Fp2& x, const Fp2& y) {
        if (x.m_ != 0 && y.m_ != 0 && (x.m_ != y.m_ || x.ns_ != y.ns_))
            throw std::invalid_argument("field mismatch between quadratic extensions");
        return x.m_ != 0 ? std::pair{x.m_, x.ns_} : std::pair{y.m_, y.ns_};
    }

    long long a_, b_, m_, ns_;
};

// ---------------------------------------------------------------------------
// Rationals: thin wrapper over GMP keeping everything canonical.
// ---------------------------------------------------------------------------

class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long long v) : q_(static_cast<long>(v)) {}
    Rat(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("division by zero in Q");
        return Rat(mpq_class(1 / q_));
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.q_; }

  private:
    mpq_class q_;
};

// ---------------------------------------------------------------------------
// Uniform scalar interface
// ---------------------------------------------------------------------------

template <class K>
struct field_traits;

template <>
struct field_traits<Fp> {
    static constexpr FieldKind kind = FieldKind::Prime;
    static constexpr bool finite = true;
    static Fp make(const FieldSpec& s, long long v) { return Fp(v, s.p); }
    static FieldSpec spec(const Fp& x) { return FieldSpec::prime(x.modulus()); }
    static std::vector<Fp> elements(const FieldSpec& s) {
        std::vector<Fp> out;
        out.reserve(s.p);
        for (long long v = 0; v < s.p; ++v) out.emplace_back(v, s.p);
        return out;
    }
    static std::string key(const Fp& x) { return std::to_string(x.value()); }
};

template <>
struct field_traits<Fp2> {
    static constexpr FieldKind kind = FieldKind::PrimeSquare;
    static constexpr bool finite = true;
    static Fp2 make(const FieldSpec& s, long long v) { return Fp2(v, 0, s.p, s.nonsquare); }
    static FieldSpec spec(const Fp2& x) { return FieldSpec::prime_square(x.modulus(), x.nonsquare()); }
    static std::vector<Fp2> elements(const FieldSpec& s) {
        std::vector<Fp2> out;
        out.reserve(s.p * s.p);
        for (long long a = 0; a < s.p; ++a)
            for (long long b = 0; b < s.p; ++b) out.emplace_back(a, b, s.p, s.nonsquare);
        return out;
    }
    static std::string key(const Fp2& x) {
        return std::to_string(x.re()) + "+" + std::to_string(x.im()) + "t";
    }
};

template <>
struct field_traits<Rat> {
    static constexpr FieldKind kind = FieldKind::Rational;
    static constexpr bool finite = false;
    static Rat make(const FieldSpec&, long long v) { return Rat(v); }
    static FieldSpec spec(const Rat&) { return FieldSpec::rational(); }
    static std::vector<Rat> elements(const FieldSpec&) {
        throw std::logic_error("cannot enumerate Q");
    }
    static std::string key(const Rat& x) { return x.value().get_str(); }
};

template <class K>
bool is_zero(const K& x) { return x.is_zero(); }

template <class K>
K scalar_pow(K base, long long e) {
    if (e < 0) return scalar_pow(base.inv(), -e);
    K result(1); // unbound literal; binds on first multiplication
    K b = base;
    while (e > 0) {
        if (e & 1) result = result * b;
        b = b * b;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Square roots
// ---------------------------------------------------------------------------

/// Tonelli-Shanks in F_p. Returns the root r with r <= p - r.
inline std::optional<Fp> sqrt_in_field(const Fp& x) {
    long long p = x.modulus(), a = x.value();
    if (p == 0) throw std::domain_error("sqrt of unbound literal");
    if (a == 0) return Fp(0, p);
    if (legendre_symbol(a, p) != 1) return std::nullopt;
    long long r;
    if (p % 4 == 3) {
        r = pow_mod_ll(a, (p + 1) / 4, p);
    } else {
        long long q = p - 1, s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        long long z = smallest_nonresidue(p);
        long long m = s;
        long long c = pow_mod_ll(z, q, p);
        long long t = pow_mod_ll(a, q, p);
        r = pow_mod_ll(a, (q + 1) / 2, p);
        while (t != 1) {
            long long i = 0, tt = t;
            while (tt != 1) { tt = static_cast<long long>((__int128)tt * tt % p); ++i; }
            long long b = c;
            for (long long j = 0; j < m - i - 1; ++j)
                b = static_cast<long long>((__int128)b * b % p);
            m = i;
            c = static_cast<long long>((__int128)b * b % p);
            t = static_cast<long long>((__int128)t * c % p);
            r = static_cast<long long>((__int128)r * b % p);
        }
    }
    if (r > p - r) r = p - r;
    return Fp(r, p);
}

/// Tonelli-Shanks in F_{p^2} (group order p^2 - 1).
inline std::optional<Fp2> sqrt_in_field(const Fp2& x) {
    if (!x.bound()) throw std::domain_error("sqrt of unbound literal");
    if (x.is_zero()) return Fp2(0, 0, x.modulus(), x.nonsquare());
    FieldSpec s = field_traits<Fp2>::spec(x);
    long long q = s.order();
    auto pw = [](Fp2 b, long long e) {
        Fp2 acc(1, 0, b.modulus(), b.nonsquare());
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    };
    Fp2 one(1, 0, s.p, s.nonsquare);
    if (pw(x, (q - 1) / 2) != one) return std::nullopt;
    long long qq = q - 1, e2 = 0;
    while (qq % 2 == 0) { qq /= 2; ++e2; }
    // deterministic scan for a non-residue of F_{p^2}
    Fp2 z = one;
    for (long long b = 1; b < s.p && pw(z, (q - 1) / 2) == one; ++b)
        for (long long a = 0; a < s.p; ++a) {
            z = Fp2(a, b, s.p, s.nonsquare);
            if (pw(z, (q - 1) / 2) != one) break;
        }
    long long m = e2;
    Fp2 c = pw(z, qq);
    Fp2 t = pw(x, qq);
    Fp2 r = pw(x, (qq + 1) / 2);
    while (t != one) {
        long long i = 0;
        Fp2 tt = t;
        while (tt != one) { tt = tt * tt; ++i; }
        Fp2 b = c;
        for (long long j = 0; j < m - i - 1; ++j) b = b * b;
        m = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

/// Exact rational square root (both numerator and denominator perfect squares).
inline std::optional<Rat> sqrt_in_field(const Rat& x) {
    if (x.is_zero()) return Rat(0);
    if (x.value() < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rat(mpq_class(rn) / mpq_class(rd));
    }
    return std::nullopt;
}

template <class K>
bool is_square(const K& x) {
    return is_zero(x) || sqrt_in_field(x).has_value();
}

// ---------------------------------------------------------------------------
// Quadratic equations  a l^2 + b l + c = 0
// ---------------------------------------------------------------------------

enum class QuadraticStatus {
    BaseField,              ///< all roots live in the coefficient field
    QuadraticExtension,     ///< roots returned in F_{p^2} (prime-field input only)
    IrrationalDiscriminant, ///< rational input, discriminant not a perfect square
    NoRootInField,          ///< extension-field input whose roots would need F_{p^4}
};

template <class K>
struct QuadraticRoots {
    QuadraticStatus status = QuadraticStatus::BaseField;
    std::vector<K> roots;            // roots in the base field
    std::vector<Fp2> extension_roots; // populated only for status == QuadraticExtension
};

namespace detail {
template <class K>
QuadraticRoots<K> quadratic_base_roots(const K& a, const K& b, const K& disc) {
    QuadraticRoots<K> out;
    K s = *sqrt_in_field(disc);
    K two_a = a + a;
    out.roots.push_back((-b + s) / two_a);
    K r2 = (-b - s) / two_a;
    if (r2 != out.roots.front()) out.roots.push_back(r2);
    return out;
}
} // namespace detail

template <class K>
QuadraticRoots<K> solve_quadratic(const K& a, const K& b, const K& c) {
    QuadraticRoots<K> out;
    if (is_zero(a)) {
        if (is_zero(b)) {
            if (is_zero(c)) throw std::invalid_argument("all coefficients zero");
            throw std::domain_error("no root");
        }
        out.roots.push_back(-c / b);
        return out;
    }
    K four = a / a + a / a;
    four = four + four;
    K disc = b * b - four * a * c;
    if (is_square(disc)) return detail::quadratic_base_roots(a, b, disc);

    if constexpr (std::is_same_v<K, Fp>) {
        // lift to F_{p^2}: disc = ns * s0^2 for the canonical non-residue ns
        FieldSpec base = field_traits<Fp>::spec(a.bind(b.bound() ? b.modulus() : c.modulus()));
        FieldSpec ext = quadratic_extension(base);
        Fp ns(ext.nonsquare, base.p);
        Fp s0 = *sqrt_in_field(disc / ns);
        Fp2 sq(0, s0.value(), base.p, ext.nonsquare);
        Fp2 a2 = Fp2::embed(a.bind(base.p), ext.nonsquare);
        Fp2 b2 = Fp2::embed(b.bind(base.p), ext.nonsquare);
        Fp2 two2(2, 0, base.p, ext.nonsquare);
        out.status = QuadraticStatus::QuadraticExtension;
        out.extension_roots.push_back((-b2 + sq) / (two2 * a2));
        out.extension_roots.push_back((-b2 - sq) / (two2 * a2));
        return out;
    } else if constexpr (std::is_same_v<K, Rat>) {
        out.status = QuadraticStatus::IrrationalDiscriminant;
        return out;
    } else {
        out.status = QuadraticStatus::NoRootInField;
        return out;
    }
}

} // namespace liesym

// ---------------------------------------------------------------------------
// Eigen integration
// ---------------------------------------------------------------------------

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<liesym::Fp> {
    typedef liesym::Fp Real;
    typedef liesym::Fp NonInteger;
    typedef liesym::Fp Nested;
    typedef liesym::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 6
    };
    static inline Real epsilon() { return liesym::Fp(0); }
    static inline Real dummy_precision() { return liesym::Fp(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<liesym::Fp2> {
    typedef liesym::Fp2 Real;
    typedef liesym::Fp2 NonInteger;
    typedef liesym::Fp2 Nested;
    typedef liesym::Fp2 Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 6,
        MulCost = 12
    };
    static inline Real epsilon() { return liesym::Fp2(0); }
    static inline Real dummy_precision() { return liesym::Fp2(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<liesym::Rat> {
    typedef liesym::Rat Real;
    typedef liesym::Rat NonInteger;
    typedef liesym::Rat Nested;
    typedef liesym::Rat Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 20,
        MulCost = 40
    };
    static inline Real epsilon() { return liesym::Rat(0); }
    static inline Real dummy_precision() { return liesym::Rat(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

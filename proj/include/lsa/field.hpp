#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lsa {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "n"; canonical reduced form with positive denominator.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Deterministic primality test, valid for all p < 2^31 (trial division).
inline bool is_prime_u32(uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

// Runtime description of the coefficient field: GF(p) or Q.
struct FieldSpec {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::Rationals;
    uint32_t modulus = 0;  // set iff PrimeField

    static FieldSpec prime(uint32_t p) {
        if (!is_prime_u32(p))
            throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
        return FieldSpec{Kind::PrimeField, p};
    }
    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

    // "gf:p" or "q"
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("gf:", 0) == 0) {
            unsigned long p = std::stoul(s.substr(3));
            if (p >= (1ull << 31)) throw std::invalid_argument("modulus too large: " + s);
            return prime(static_cast<uint32_t>(p));
        }
        throw std::invalid_argument("bad field spec: " + s);
    }
    std::string str() const {
        return kind == Kind::Rationals ? "q" : "gf:" + std::to_string(modulus);
    }
    bool operator==(const FieldSpec&) const = default;
};

// GF(p), elements stored as canonical representatives in [0, p).
class GFp {
  public:
    using Elem = uint32_t;

    GFp() : p_(2) {}
    explicit GFp(uint32_t p) : p_(p) {
        if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
    }
    explicit GFp(const FieldSpec& fs) : GFp(fs.modulus) {
        if (fs.kind != FieldSpec::Kind::PrimeField)
            throw std::invalid_argument("FieldSpec is not a prime field");
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p_}; }
    uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p_ ? Elem(s - p_) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return Elem(uint64_t(a) * b % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem from_int(long v) const {
        long m = v % long(p_);
        if (m < 0) m += p_;
        return Elem(m);
    }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem from_string(const std::string& s) const {
        mpz_class z(s, 10);
        mpz_class m = z % p_;
        if (m < 0) m += p_;
        return Elem(m.get_ui());
    }

    bool operator==(const GFp& o) const { return p_ == o.p_; }

  private:
    uint32_t p_;
};

// The rationals, with canonical reduced representatives.
class Rationals {
  public:
    using Elem = mpq_class;

    Rationals() = default;
    explicit Rationals(const FieldSpec& fs) {
        if (fs.kind != FieldSpec::Kind::Rationals)
            throw std::invalid_argument("FieldSpec is not the rationals");
    }

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    Elem from_int(long v) const { return Elem(v); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    Elem from_string(const std::string& s) const { return parse_rat(s); }

    bool operator==(const Rationals&) const { return true; }

  private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw std::domain_error("division by zero");
        return b;
    }
};

}  // namespace lsa

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfcyc {

class Scalar;

// The base field: either the rationals or a prime field F_p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t modulus() const { return p_; }
    // Characteristic of the field; 0 for the rationals.
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    // Accepts "a", "-a", "a/b" with integer a, b (b != 0).
    Scalar parse(const std::string& text) const;
    Scalar convert(const Scalar& s) const;

    std::string name() const;
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exact field element. Rationals use an int64 fast path and fall back to GMP
// when numerator or denominator outgrow it; residues are stored reduced in [0, p).
class Scalar {
public:
    Scalar() = default;  // rational zero
    static Scalar rational(long long num, long long den = 1);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(long long v, std::uint64_t p);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return kind_ != Kind::Mod; }
    std::uint64_t modulus() const { return kind_ == Kind::Mod ? static_cast<std::uint64_t>(d_) : 0; }
    Field field() const;
    // Image under Z[1/d] -> F_p; identity on residues mod p.
    Scalar to_residue(std::uint64_t p) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Numerator/denominator of a rational (for residues: residue and 1).
    mpq_class to_mpq() const;
    std::string to_string() const;
    // Size of the numerator; used as the pivot heuristic.
    std::size_t height() const;

private:
    enum class Kind : std::uint8_t { Small, Big, Mod };
    Kind kind_ = Kind::Small;
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;

    static Scalar from_mpq(mpq_class q);
    static Scalar from_i128(__int128 num, __int128 den);
    void check_same(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfcyc

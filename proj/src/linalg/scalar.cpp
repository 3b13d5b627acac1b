#include "hopfcyc/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace hopfcyc {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t(1) << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    thread_local std::uint64_t last_checked = 0;
    if (p == last_checked) return Field(p);
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t(1) << 62)) throw std::invalid_argument("field modulus too large");
    last_checked = p;
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (p_ == 0) return Scalar::rational(v);
    return Scalar::residue(v, p_);
}

Scalar Field::parse(const std::string& text) const {
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty coefficient");
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = trim(t.substr(0, slash));
        den = trim(t.substr(slash + 1));
    }
    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed coefficient '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    mpz_class zn(num), zd(den);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    if (p_ == 0) {
        mpq_class q(zn, zd);
        q.canonicalize();
        return Scalar::rational(q);
    }
    mpz_class pz = static_cast<unsigned long>(p_);
    mpz_class rn = zn % pz, rd = zd % pz;
    if (rn < 0) rn += pz;
    if (rd < 0) rd += pz;
    if (rd == 0) throw std::invalid_argument("denominator divisible by the characteristic in '" + text + "'");
    Scalar a = Scalar::residue(static_cast<long long>(rn.get_ui()), p_);
    Scalar b = Scalar::residue(static_cast<long long>(rd.get_ui()), p_);
    return a / b;
}

Scalar Field::convert(const Scalar& s) const {
    if (p_ == 0) {
        if (!s.is_rational()) throw FieldMismatch("cannot convert a residue to a rational");
        return s;
    }
    if (!s.is_rational()) {
        if (s.modulus() != p_) throw FieldMismatch("residues modulo different primes");
        return s;
    }
    return s.to_residue(p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return from_i128(num, den);
}

Scalar Scalar::rational(const mpq_class& q) { return from_mpq(q); }

Scalar Scalar::residue(long long v, std::uint64_t p) {
    Scalar s;
    s.kind_ = Kind::Mod;
    s.n_ = static_cast<std::int64_t>(reduce_signed(v, p));
    s.d_ = static_cast<std::int64_t>(p);
    return s;
}

Scalar Scalar::from_i128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Scalar();
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num > -kSmallLimit && num < kSmallLimit && den < kSmallLimit) {
        Scalar s;
        s.n_ = static_cast<std::int64_t>(num);
        s.d_ = static_cast<std::int64_t>(den);
        return s;
    }
    auto to_mpz = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
        mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    };
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    return from_mpq(q);
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nn = n.get_si(), dd = d.get_si();
        if (nn > -kSmallLimit && nn < kSmallLimit && dd < kSmallLimit) {
            Scalar s;
            s.n_ = nn;
            s.d_ = dd;
            return s;
        }
    }
    Scalar s;
    s.kind_ = Kind::Big;
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Scalar::to_residue(std::uint64_t p) const {
    if (kind_ == Kind::Mod) {
        if (static_cast<std::uint64_t>(d_) != p) throw FieldMismatch("residues modulo different primes");
        return *this;
    }
    if (kind_ == Kind::Small) {
        Scalar den = residue(d_, p);
        if (den.is_zero()) throw std::domain_error("denominator divisible by the characteristic");
        return residue(n_, p) * den.inverse();
    }
    return Field::prime(p).parse(to_string());
}

Field Scalar::field() const { return kind_ == Kind::Mod ? Field::prime(static_cast<std::uint64_t>(d_)) : Field(); }

bool Scalar::is_zero() const { return kind_ != Kind::Big && n_ == 0; }

bool Scalar::is_one() const {
    if (kind_ == Kind::Big) return false;
    return n_ == 1 && (kind_ == Kind::Mod || d_ == 1);
}

mpq_class Scalar::to_mpq() const {
    switch (kind_) {
        case Kind::Small: return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
        case Kind::Big: return *big_;
        case Kind::Mod: return mpq_class(static_cast<long>(n_));
    }
    return {};
}

std::string Scalar::to_string() const {
    switch (kind_) {
        case Kind::Small: return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
        case Kind::Big: return big_->get_str();
        case Kind::Mod: return std::to_string(n_);
    }
    return {};
}

std::size_t Scalar::height() const {
    if (kind_ == Kind::Big) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + 64;
    std::uint64_t v = static_cast<std::uint64_t>(n_ < 0 ? -n_ : n_);
    std::size_t h = 0;
    while (v) {
        v >>= 1;
        ++h;
    }
    return h;
}

void Scalar::check_same(const Scalar& o) const {
    if ((kind_ == Kind::Mod) != (o.kind_ == Kind::Mod) || (kind_ == Kind::Mod && d_ != o.d_))
        throw FieldMismatch("arithmetic between elements of different fields");
}

namespace {
// Coerce a rational into F_p when mixed with a residue (the canonical map).
Scalar coerce(const Scalar& a, const Scalar& like) {
    if (a.is_rational() && !like.is_rational()) return a.to_residue(like.modulus());
    return a;
}
}  // namespace

Scalar Scalar::operator-() const {
    switch (kind_) {
        case Kind::Small: {
            Scalar s = *this;
            s.n_ = -n_;
            return s;
        }
        case Kind::Big: return from_mpq(-*big_);
        case Kind::Mod: {
            Scalar s = *this;
            if (n_ != 0) s.n_ = d_ - n_;
            return s;
        }
    }
    return {};
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return coerce(*this, o) + coerce(o, *this);
    check_same(o);
    if (kind_ == Kind::Mod) {
        std::uint64_t p = static_cast<std::uint64_t>(d_);
        std::uint64_t r = static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(o.n_);
        if (r >= p) r -= p;
        Scalar s = *this;
        s.n_ = static_cast<std::int64_t>(r);
        return s;
    }
    if (kind_ == Kind::Small && o.kind_ == Kind::Small) {
        if (d_ == 1 && o.d_ == 1) return from_i128(static_cast<__int128>(n_) + o.n_, 1);
        return from_i128(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                         static_cast<__int128>(d_) * o.d_);
    }
    return from_mpq(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return coerce(*this, o) * coerce(o, *this);
    check_same(o);
    if (kind_ == Kind::Mod) {
        Scalar s = *this;
        s.n_ = static_cast<std::int64_t>(
            mulmod(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(o.n_), static_cast<std::uint64_t>(d_)));
        return s;
    }
    if (kind_ == Kind::Small && o.kind_ == Kind::Small) {
        if (n_ == 0 || o.n_ == 0) return Scalar();
        if (d_ == 1 && o.d_ == 1) return from_i128(static_cast<__int128>(n_) * o.n_, 1);
        return from_i128(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
    }
    return from_mpq(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    switch (kind_) {
        case Kind::Small: return from_i128(d_, n_);
        case Kind::Big: return from_mpq(1 / *big_);
        case Kind::Mod: {
            Scalar s = *this;
            std::uint64_t p = static_cast<std::uint64_t>(d_);
            s.n_ = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(n_), p - 2, p));
            return s;
        }
    }
    return {};
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return coerce(*this, o) == coerce(o, *this);
    if (kind_ == Kind::Mod) return d_ == o.d_ && n_ == o.n_;
    if (kind_ == Kind::Small && o.kind_ == Kind::Small) return n_ == o.n_ && d_ == o.d_;
    if (kind_ != o.kind_) return false;  // canonical forms differ in size class
    return *big_ == *o.big_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfcyc

#include "latcol/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace latcol {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

unsigned __int128 uabs(__int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool mpz_fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
    if (n == std::numeric_limits<std::int64_t>::min()) {
        *this = from_mpq(mpq_class(to_mpz(n)));
    }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        return {};
    }
    unsigned __int128 g = gcd128(uabs(n), static_cast<unsigned __int128>(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    auto to_mpz128 = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = uabs(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & UINT64_MAX));
        mpz_class z = (hi << 64) + lo;
        return neg ? mpz_class(-z) : z;
    };
    return from_mpq(mpq_class(to_mpz128(n), to_mpz128(d)));
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) {
            return false;
        }
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    if (!valid_int(num_text, true)) {
        throw std::invalid_argument("malformed integer '" + std::string(num_text) + "'");
    }
    std::string num_str(num_text[0] == '+' ? num_text.substr(1) : num_text);
    mpz_class num(num_str, 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        if (!valid_int(den_text, false)) {
            throw std::invalid_argument("malformed denominator '" + std::string(den_text) + "'");
        }
        den = mpz_class(std::string(den_text), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
    }
    return from_mpq(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

std::string Rational::to_string() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) {
        return from_mpq(-*big_);
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    if (big_) {
        return from_mpq(1 / *big_);
    }
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    }
    if (a.num_ == 0) {
        return b;
    }
    if (b.num_ == 0) {
        return a;
    }
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
            Rational r;
            r.num_ = s;
            return r;
        }
        return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    // Knuth's gcd-splitting addition keeps intermediates small.
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t da = a.den_ / g;
    std::int64_t db = b.den_ / g;
    __int128 t = static_cast<__int128>(a.num_) * db + static_cast<__int128>(b.num_) * da;
    if (t == 0) {
        return {};
    }
    auto tg = static_cast<std::int64_t>(uabs(t) % static_cast<unsigned __int128>(g));
    std::int64_t g2 = std::gcd(tg, g);
    __int128 n = t / g2;
    __int128 d = static_cast<__int128>(da) * (b.den_ / g2);
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    }
    if (a.num_ == 0 || b.num_ == 0) {
        return {};
    }
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    std::int64_t an = a.num_ / g1;
    std::int64_t bd = b.den_ / g1;
    std::int64_t bn = b.num_ / g2;
    std::int64_t ad = a.den_ / g2;
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (!__builtin_mul_overflow(an, bn, &n) && !__builtin_mul_overflow(ad, bd, &d) &&
        n != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    return Rational::from_wide(static_cast<__int128>(an) * bn, static_cast<__int128>(ad) * bd);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (a.big_ && b.big_) {
            return *a.big_ == *b.big_;
        }
        return false;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::size_t Rational::hash() const {
    if (big_) {
        return std::hash<std::string>{}(big_->get_str());
    }
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace latcol

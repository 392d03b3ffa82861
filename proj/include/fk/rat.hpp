#pragma once

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <string>

namespace fk {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 uabs128(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

inline u128 gcd128(u128 a, u128 b) {
    while (b) { u128 t = a % b; a = b; b = t; }
    return a;
}

constexpr int64_t kRatMax = INT64_MAX;

inline bool fits64(i128 x) { return x >= -i128(kRatMax) && x <= i128(kRatMax); }

}  // namespace detail

// Exact rational scalar. Values are kept as a reduced int64 pair (denominator
// positive, gcd 1) and transparently promoted to a heap mpq when a result no
// longer fits. Arithmetic never rounds.
class Rat {
public:
    Rat() : n_(0), d_(1), big_(nullptr) {}
    Rat(int64_t n) : n_(n), d_(1), big_(nullptr) {}
    Rat(int n) : n_(n), d_(1), big_(nullptr) {}
    Rat(int64_t n, int64_t d);
    ~Rat() {
        if (big_) release();
    }

    Rat(const Rat& o) : n_(o.n_), d_(o.d_), big_(nullptr) {
        if (o.big_) copy_big(o);
    }
    Rat(Rat&& o) noexcept : n_(o.n_), d_(o.d_), big_(o.big_) { o.big_ = nullptr; }
    Rat& operator=(const Rat& o) {
        if (this == &o) return *this;
        if (big_) release();
        n_ = o.n_; d_ = o.d_; big_ = nullptr;
        if (o.big_) copy_big(o);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this == &o) return *this;
        if (big_) release();
        n_ = o.n_; d_ = o.d_; big_ = o.big_;
        o.big_ = nullptr;
        return *this;
    }

    static Rat from_string(const std::string& s);  // "p" or "p/q"
    std::string str() const;

    bool is_zero() const { return big_ ? big_zero() : n_ == 0; }
    bool is_one() const { return big_ ? big_one() : (n_ == 1 && d_ == 1); }
    bool is_small() const { return big_ == nullptr; }
    bool is_integer() const { return big_ ? big_integer() : d_ == 1; }
    int sign() const;
    int64_t num_small() const { return n_; }
    int64_t den_small() const { return d_; }

    int bit_size() const;  // approximate, for pivot selection

    Rat operator-() const;

    Rat& operator+=(const Rat& o) {
        if (!big_ && !o.big_) {
            detail::i128 n = detail::i128(n_) * o.d_ + detail::i128(o.n_) * d_;
            detail::i128 d = detail::i128(d_) * o.d_;
            set128(n, d);
            return *this;
        }
        add_big(o);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        if (!big_ && !o.big_) {
            detail::i128 n = detail::i128(n_) * o.d_ - detail::i128(o.n_) * d_;
            detail::i128 d = detail::i128(d_) * o.d_;
            set128(n, d);
            return *this;
        }
        sub_big(o);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        if (!big_ && !o.big_) {
            if (n_ == 0 || o.n_ == 0) { n_ = 0; d_ = 1; return *this; }
            set128(detail::i128(n_) * o.n_, detail::i128(d_) * o.d_);
            return *this;
        }
        mul_big(o);
        return *this;
    }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    Rat inv() const;

    bool operator==(const Rat& o) const {
        if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
        return eq_big(o);
    }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;

    // acc += c * x
    static void addmul(Rat& acc, const Rat& c, const Rat& x) {
        if (!acc.big_ && !c.big_ && !x.big_) {
            detail::i128 cn = detail::i128(c.n_) * x.n_;
            if (cn == 0) return;
            detail::i128 cd = detail::i128(c.d_) * x.d_;
            detail::i128 n = detail::i128(acc.n_) * cd + cn * acc.d_;
            detail::i128 d = detail::i128(acc.d_) * cd;
            acc.set128(n, d);
            return;
        }
        acc.addmul_big(c, x);
    }

    uint64_t hash() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    int64_t n_;
    int64_t d_;
    void* big_;  // mpq_t*, kept opaque so gmp stays out of headers

    // Reduce n/d (d != 0) and store, promoting if it does not fit.
    void set128(detail::i128 n, detail::i128 d) {
        if (n == 0) { n_ = 0; d_ = 1; return; }
        if (d < 0) { n = -n; d = -d; }
        detail::u128 g = detail::gcd128(detail::uabs128(n), detail::u128(d));
        if (g > 1) { n /= detail::i128(g); d /= detail::i128(g); }
        if (detail::fits64(n) && detail::fits64(d)) {
            n_ = int64_t(n);
            d_ = int64_t(d);
        } else {
            promote_set(n, d);
        }
    }

    void release();
    void copy_big(const Rat& o);
    void promote_set(detail::i128 n, detail::i128 d);
    bool big_zero() const;
    bool big_one() const;
    bool big_integer() const;
    void add_big(const Rat& o);
    void sub_big(const Rat& o);
    void mul_big(const Rat& o);
    void addmul_big(const Rat& c, const Rat& x);
    bool eq_big(const Rat& o) const;

    friend Rat rat_from_mpq_raw(const void* q);
    friend void rat_to_mpq_raw(const Rat& r, void* q);
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace fk

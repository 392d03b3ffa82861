#include "fk/rat.hpp"

#include <gmp.h>

#include "fk/util.hpp"

#include <ostream>
#include <stdexcept>

namespace fk {

namespace {

mpq_ptr as_q(void* p) { return static_cast<mpq_ptr>(p); }
mpq_srcptr as_q(const void* p) { return static_cast<mpq_srcptr>(p); }

void set_mpq_i128(mpq_ptr q, detail::i128 n, detail::i128 d) {
    // n/d already reduced, d > 0
    bool neg = n < 0;
    detail::u128 un = detail::uabs128(n);
    detail::u128 ud = detail::u128(d);
    mpz_set_ui(mpq_numref(q), uint64_t(un >> 64));
    mpz_mul_2exp(mpq_numref(q), mpq_numref(q), 64);
    mpz_add_ui(mpq_numref(q), mpq_numref(q), uint64_t(un));
    if (neg) mpz_neg(mpq_numref(q), mpq_numref(q));
    mpz_set_ui(mpq_denref(q), uint64_t(ud >> 64));
    mpz_mul_2exp(mpq_denref(q), mpq_denref(q), 64);
    mpz_add_ui(mpq_denref(q), mpq_denref(q), uint64_t(ud));
}

}  // namespace

Rat::Rat(int64_t n, int64_t d) : n_(0), d_(1), big_(nullptr) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    set128(n, d);
}

void Rat::release() {
    mpq_clear(as_q(big_));
    std::free(big_);
    big_ = nullptr;
}

void Rat::copy_big(const Rat& o) {
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), as_q(o.big_));
}

void Rat::promote_set(detail::i128 n, detail::i128 d) {
    if (!big_) {
        big_ = std::malloc(sizeof(mpq_t));
        mpq_init(as_q(big_));
    }
    set_mpq_i128(as_q(big_), n, d);
}

// Demote to the small representation when the value fits.
static void try_demote(int64_t& n_, int64_t& d_, void*& big_) {
    mpq_srcptr q = static_cast<mpq_srcptr>(big_);
    if (mpz_fits_slong_p(mpq_numref(q)) && mpz_fits_slong_p(mpq_denref(q))) {
        int64_t n = mpz_get_si(mpq_numref(q));
        int64_t d = mpz_get_si(mpq_denref(q));
        mpq_clear(static_cast<mpq_ptr>(big_));
        std::free(big_);
        big_ = nullptr;
        n_ = n;
        d_ = d;
    }
}

bool Rat::big_zero() const { return mpq_sgn(as_q(big_)) == 0; }
bool Rat::big_one() const { return mpq_cmp_si(as_q(big_), 1, 1) == 0; }
bool Rat::big_integer() const { return mpz_cmp_ui(mpq_denref(as_q(big_)), 1) == 0; }

int Rat::sign() const {
    if (!big_) return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
    return mpq_sgn(as_q(big_));
}

int Rat::bit_size() const {
    if (!big_) {
        uint64_t un = n_ < 0 ? uint64_t(-(n_ + 1)) + 1 : uint64_t(n_);
        int bn = un ? 64 - __builtin_clzll(un) : 0;
        int bd = d_ > 1 ? 64 - __builtin_clzll(uint64_t(d_)) : 0;
        return bn + bd;
    }
    mpq_srcptr q = as_q(big_);
    return int(mpz_sizeinbase(mpq_numref(q), 2) + mpz_sizeinbase(mpq_denref(q), 2));
}

Rat Rat::operator-() const {
    Rat r(*this);
    if (!r.big_) {
        r.n_ = -r.n_;
    } else {
        mpq_neg(as_q(r.big_), as_q(r.big_));
    }
    return r;
}

// big-path helpers: normalize everything through mpq

static void to_mpq(mpq_ptr out, const Rat& r, const void* big, int64_t n, int64_t d) {
    if (big) {
        mpq_set(out, static_cast<mpq_srcptr>(big));
    } else {
        mpq_set_si(out, n, 1);
        mpz_set_si(mpq_denref(out), d);
    }
    (void)r;
}

void rat_to_mpq_raw(const Rat& r, void* q) {
    to_mpq(static_cast<mpq_ptr>(q), r, r.big_, r.n_, r.d_);
}

Rat rat_from_mpq_raw(const void* q) {
    Rat r;
    r.big_ = std::malloc(sizeof(mpq_t));
    mpq_init(static_cast<mpq_ptr>(r.big_));
    mpq_set(static_cast<mpq_ptr>(r.big_), static_cast<mpq_srcptr>(q));
    try_demote(r.n_, r.d_, r.big_);
    return r;
}

void Rat::add_big(const Rat& o) {
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    mpq_add(a, a, b);
    if (big_) release();
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), a);
    mpq_clear(a);
    mpq_clear(b);
    try_demote(n_, d_, big_);
}

void Rat::sub_big(const Rat& o) {
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    mpq_sub(a, a, b);
    if (big_) release();
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), a);
    mpq_clear(a);
    mpq_clear(b);
    try_demote(n_, d_, big_);
}

void Rat::mul_big(const Rat& o) {
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    mpq_mul(a, a, b);
    if (big_) release();
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), a);
    mpq_clear(a);
    mpq_clear(b);
    try_demote(n_, d_, big_);
}

void Rat::addmul_big(const Rat& c, const Rat& x) {
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(c, a);
    rat_to_mpq_raw(x, b);
    mpq_mul(a, a, b);
    rat_to_mpq_raw(*this, b);
    mpq_add(a, a, b);
    if (big_) release();
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), a);
    mpq_clear(a);
    mpq_clear(b);
    try_demote(n_, d_, big_);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    if (!big_ && !o.big_) {
        detail::i128 n = detail::i128(n_) * o.d_;
        detail::i128 d = detail::i128(d_) * o.n_;
        set128(n, d);
        return *this;
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    mpq_div(a, a, b);
    if (big_) release();
    big_ = std::malloc(sizeof(mpq_t));
    mpq_init(as_q(big_));
    mpq_set(as_q(big_), a);
    mpq_clear(a);
    mpq_clear(b);
    try_demote(n_, d_, big_);
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    if (!big_) {
        Rat r;
        r.set128(d_, n_);
        return r;
    }
    Rat r(1);
    r /= *this;
    return r;
}

bool Rat::eq_big(const Rat& o) const {
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    bool eq = mpq_equal(a, b) != 0;
    mpq_clear(a);
    mpq_clear(b);
    return eq;
}

bool Rat::operator<(const Rat& o) const {
    if (!big_ && !o.big_) {
        return detail::i128(n_) * o.d_ < detail::i128(o.n_) * d_;
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    rat_to_mpq_raw(*this, a);
    rat_to_mpq_raw(o, b);
    bool lt = mpq_cmp(a, b) < 0;
    mpq_clear(a);
    mpq_clear(b);
    return lt;
}

uint64_t Rat::hash() const {
    if (!big_) {
        int64_t nd[2] = {n_, d_};
        return fnv1a(nd, sizeof nd);
    }
    return fnv1a(str());
}

std::string Rat::str() const {
    if (!big_) {
        std::string s = std::to_string(n_);
        if (d_ != 1) s += "/" + std::to_string(d_);
        return s;
    }
    mpq_srcptr q = as_q(big_);
    char* c = mpq_get_str(nullptr, 10, q);
    std::string s(c);
    std::free(c);
    return s;
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpq_t q;
        mpq_init(q);
        if (mpq_set_str(q, s.c_str(), 10) != 0) {
            mpq_clear(q);
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
        mpq_canonicalize(q);
        Rat r = rat_from_mpq_raw(q);
        mpq_clear(q);
        return r;
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat r = rat_from_mpq_raw(q);
    mpq_clear(q);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace fk

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fk/perm.hpp"
#include "fk/rat.hpp"
#include "fk/util.hpp"

namespace fk {

// Letters are indices into an alphabet. For the x_ij generators of E_n / D_n
// the alphabet is the C(n,2) pairs (i,j), i < j, in lexicographic order; the
// rewrite machinery also runs over abstract alphabets (arrow labels).
using Letter = uint8_t;

constexpr int kMaxWordLen = 30;

struct Word {
    uint8_t len = 0;
    std::array<Letter, kMaxWordLen> a{};

    static Word empty() { return Word{}; }
    static Word one(Letter g) {
        Word w;
        w.len = 1;
        w.a[0] = g;
        return w;
    }
    static Word of(std::initializer_list<int> ls) {
        Word w;
        for (int l : ls) w.push(Letter(l));
        return w;
    }

    void push(Letter g) {
        if (len >= kMaxWordLen) throw std::length_error("Word: length cap exceeded");
        a[len++] = g;
    }
    Letter back() const { return a[len - 1]; }
    bool is_empty() const { return len == 0; }
    int size() const { return len; }
    Letter operator[](int i) const { return a[i]; }

    Word concat(const Word& o) const {
        if (len + o.len > kMaxWordLen) throw std::length_error("Word: length cap exceeded");
        Word w = *this;
        std::memcpy(w.a.data() + w.len, o.a.data(), o.len);
        w.len = uint8_t(len + o.len);
        return w;
    }
    Word sub(int pos, int count) const {
        Word w;
        w.len = uint8_t(count);
        std::memcpy(w.a.data(), a.data() + pos, count);
        return w;
    }
    Word prefix(int count) const { return sub(0, count); }
    Word suffix(int count) const { return sub(len - count, count); }

    bool operator==(const Word& o) const {
        return len == o.len && std::memcmp(a.data(), o.a.data(), len) == 0;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

    uint64_t hash() const { return fnv1a(a.data(), len, 0xcbf29ce484222325ull ^ len); }
};

// Degree first, then left-to-right lexicographic on letters.
inline bool deglex_less(const Word& x, const Word& y) {
    if (x.len != y.len) return x.len < y.len;
    return std::memcmp(x.a.data(), y.a.data(), x.len) < 0;
}
inline bool deglex_greater(const Word& x, const Word& y) { return deglex_less(y, x); }

struct WordHash {
    size_t operator()(const Word& w) const { return w.hash(); }
};

// Sparse polynomial in the free algebra: terms sorted deglex-descending,
// no zero coefficients. The leading term is t.front().
class Poly {
public:
    std::vector<std::pair<Word, Rat>> t;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c);
    static Poly word(const Word& w, Rat c = Rat(1));

    bool is_zero() const { return t.empty(); }
    const Word& lead_word() const { return t.front().first; }
    const Rat& lead_coef() const { return t.front().second; }
    int degree() const { return t.empty() ? -1 : t.front().first.size(); }

    void normalize();  // sort + combine + drop zeros
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    void add_scaled(const Poly& o, const Rat& c);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { a *= c; return a; }
    Poly operator-() const;
    bool operator==(const Poly& o) const { return t == o.t; }

    // w1 * this * w2
    Poly sandwich(const Word& w1, const Word& w2) const;
};

// Generators x_ij of E_n / D_n. 1 <= i < j <= n canonical; x_ji = -x_ij.
int gen_count(int n);
Letter gen_index(int i, int j, int n);          // requires i < j
std::pair<int, int> gen_pair(Letter g, int n);  // canonical (i, j)
std::string gen_name(Letter g, int n);          // "x12"

// Canonical generator with sign: (2,1) -> (x12, -1). Rejects i == j and
// out-of-range indices.
std::pair<Letter, int> make_generator(int i, int j, int n);

enum class Family { E, D };

struct Presentation {
    Family family = Family::D;
    int n = 0;
    Rat a1, a2;  // zero for E_n
    std::vector<Poly> relations;

    int letters() const { return gen_count(n); }
    std::string text() const;                  // emits the text format
    uint64_t key() const;                      // stable content hash
};

Presentation present_E(int n);
Presentation present_D(int n, const Rat& a1, const Rat& a2);

// Multiplicative S_n action: sigma(x_ij) = x_{sigma(i) sigma(j)}, applied
// letterwise with sign canonicalization.
Poly act(const Perm& sigma, const Poly& p, int n);
std::pair<Letter, int> act_letter(const Perm& sigma, Letter g, int n);

// Text format, one relation per line: "+ x12*x23 - 1/2*x13*x12 - 1".
std::string emit_poly(const Poly& p, int n);
Poly parse_poly(const std::string& line, int n);
std::string emit_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace fk

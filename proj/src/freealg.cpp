#include "fk/freealg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fk/matrix.hpp"

namespace fk {

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (!c.is_zero()) p.t.emplace_back(Word::empty(), c);
    return p;
}

Poly Poly::word(const Word& w, Rat c) {
    Poly p;
    if (!c.is_zero()) p.t.emplace_back(w, std::move(c));
    return p;
}

void Poly::normalize() {
    std::sort(t.begin(), t.end(),
              [](const auto& x, const auto& y) { return deglex_greater(x.first, y.first); });
    std::vector<std::pair<Word, Rat>> out;
    out.reserve(t.size());
    for (auto& [w, c] : t) {
        if (!out.empty() && out.back().first == w) {
            out.back().second += c;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!c.is_zero()) {
            out.emplace_back(w, std::move(c));
        }
    }
    t = std::move(out);
}

void Poly::add_scaled(const Poly& o, const Rat& c) {
    if (c.is_zero() || o.is_zero()) return;
    std::vector<std::pair<Word, Rat>> out;
    out.reserve(t.size() + o.t.size());
    size_t i = 0, j = 0;
    while (i < t.size() && j < o.t.size()) {
        if (t[i].first == o.t[j].first) {
            Rat v = t[i].second;
            Rat::addmul(v, c, o.t[j].second);
            if (!v.is_zero()) out.emplace_back(t[i].first, std::move(v));
            ++i;
            ++j;
        } else if (deglex_greater(t[i].first, o.t[j].first)) {
            out.push_back(std::move(t[i]));
            ++i;
        } else {
            out.emplace_back(o.t[j].first, c * o.t[j].second);
            ++j;
        }
    }
    for (; i < t.size(); ++i) out.push_back(std::move(t[i]));
    for (; j < o.t.size(); ++j) out.emplace_back(o.t[j].first, c * o.t[j].second);
    t = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
    add_scaled(o, Rat(1));
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    add_scaled(o, Rat(-1));
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        t.clear();
        return *this;
    }
    for (auto& [w, v] : t) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [w, v] : p.t) v = -v;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    p.t.reserve(a.t.size() * b.t.size());
    for (auto& [wa, ca] : a.t)
        for (auto& [wb, cb] : b.t) p.t.emplace_back(wa.concat(wb), ca * cb);
    p.normalize();
    return p;
}

Poly Poly::sandwich(const Word& w1, const Word& w2) const {
    Poly p;
    p.t.reserve(t.size());
    for (auto& [w, c] : t) p.t.emplace_back(w1.concat(w).concat(w2), c);
    // concatenation with fixed factors preserves deglex order
    return p;
}

int gen_count(int n) { return n * (n - 1) / 2; }

Letter gen_index(int i, int j, int n) {
    // pairs (1,2) (1,3) ... (1,n) (2,3) ... lex order
    return Letter((i - 1) * n - i * (i - 1) / 2 + (j - i) - 1);
}

std::pair<int, int> gen_pair(Letter g, int n) {
    int k = g;
    for (int i = 1; i < n; ++i) {
        int cnt = n - i;
        if (k < cnt) return {i, i + 1 + k};
        k -= cnt;
    }
    throw std::out_of_range("gen_pair: letter out of range");
}

std::string gen_name(Letter g, int n) {
    auto [i, j] = gen_pair(g, n);
    return "x" + std::to_string(i) + std::to_string(j);
}

std::pair<Letter, int> make_generator(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("make_generator: index out of range");
    if (i == j) throw std::invalid_argument("make_generator: i == j");
    if (i < j) return {gen_index(i, j, n), +1};
    return {gen_index(j, i, n), -1};
}

std::pair<Letter, int> act_letter(const Perm& sigma, Letter g, int n) {
    auto [i, j] = gen_pair(g, n);
    return make_generator(sigma(i), sigma(j), n);
}

Poly act(const Perm& sigma, const Poly& p, int n) {
    Poly out;
    out.t.reserve(p.t.size());
    for (auto& [w, c] : p.t) {
        Word img;
        int sign = 1;
        for (int k = 0; k < w.size(); ++k) {
            auto [g, s] = act_letter(sigma, w[k], n);
            img.push(g);
            sign *= s;
        }
        out.t.emplace_back(img, sign < 0 ? -c : c);
    }
    out.normalize();
    return out;
}

namespace {

// The triangle relation instance of eq-0.06 shape for the ordered triple
// (i,j,k):  x_ij x_jk + x_jk x_ki + x_ki x_ij  (canonicalized), minus a2.
Poly triangle_instance(int i, int j, int k, int n, const Rat& a2) {
    auto term = [&](int p1, int p2, int q1, int q2) {
        auto [g1, s1] = make_generator(p1, p2, n);
        auto [g2, s2] = make_generator(q1, q2, n);
        return Poly::word(Word::one(g1).concat(Word::one(g2)), Rat(s1 * s2));
    };
    Poly p = term(i, j, j, k);
    p += term(j, k, k, i);
    p += term(k, i, i, j);
    p -= Poly::constant(a2);
    return p;
}

// Polynomial to a coefficient vector over an enumerated word list (test
// oracle style span computation for triangle dedup).
DVec poly_vec(const Poly& p, std::map<Word, int, decltype(&deglex_less)>& index, int& next, std::vector<DVec>& rows) {
    (void)rows;
    DVec v;
    for (auto& [w, c] : p.t) {
        auto it = index.find(w);
        int id;
        if (it == index.end()) {
            id = next++;
            index.emplace(w, id);
        } else {
            id = it->second;
        }
        if (int(v.size()) <= id) v.resize(id + 1);
        v[id] = c;
    }
    return v;
}

}  // namespace

Presentation present_D(int n, const Rat& a1, const Rat& a2) {
    if (n < 3) throw std::invalid_argument("present_D: n must be >= 3");
    Presentation P;
    P.family = Family::D;
    P.n = n;
    P.a1 = a1;
    P.a2 = a2;
    // squares: x_ij^2 - a1
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Letter g = gen_index(i, j, n);
            Poly p = Poly::word(Word::one(g).concat(Word::one(g)));
            p -= Poly::constant(a1);
            P.relations.push_back(std::move(p));
        }
    // far commutators: [x_ij, x_kl] for each 4-subset, 3 pairings
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    int pairings[3][4] = {{i, j, k, l}, {i, k, j, l}, {i, l, j, k}};
                    for (auto& q : pairings) {
                        Letter g1 = gen_index(q[0], q[1], n);
                        Letter g2 = gen_index(q[2], q[3], n);
                        Poly p = Poly::word(Word::one(g1).concat(Word::one(g2)));
                        p -= Poly::word(Word::one(g2).concat(Word::one(g1)));
                        P.relations.push_back(std::move(p));
                    }
                }
    // triangles: for each 3-subset, all 6 ordered instances, kept when they
    // enlarge the span (exactly 2 survive per triple)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                int orders[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
                std::map<Word, int, decltype(&deglex_less)> index(&deglex_less);
                int next = 0;
                std::vector<Poly> cands;
                std::vector<DVec> vecs;
                for (auto& o : orders) {
                    Poly p = triangle_instance(o[0], o[1], o[2], n, a2);
                    std::vector<DVec> dummy;
                    vecs.push_back(poly_vec(p, index, next, dummy));
                    cands.push_back(std::move(p));
                }
                SpanBuilder span(next);
                for (size_t m = 0; m < cands.size(); ++m) {
                    DVec v = vecs[m];
                    v.resize(next);
                    if (span.insert(std::move(v))) P.relations.push_back(cands[m]);
                }
            }
    return P;
}

Presentation present_E(int n) {
    Presentation P = present_D(n, Rat(0), Rat(0));
    P.family = Family::E;
    return P;
}

std::string emit_poly(const Poly& p, int n) {
    if (p.is_zero()) return "+ 0";
    std::string out;
    for (size_t k = 0; k < p.t.size(); ++k) {
        const auto& [w, c] = p.t[k];
        if (k) out += " ";
        Rat ac = c.sign() < 0 ? -c : c;
        out += (c.sign() < 0) ? "- " : "+ ";
        if (w.is_empty()) {
            out += ac.str();
        } else {
            if (!ac.is_one()) out += ac.str() + "*";
            for (int m = 0; m < w.size(); ++m) {
                if (m) out += "*";
                out += gen_name(w[m], n);
            }
        }
    }
    return out;
}

Poly parse_poly(const std::string& line, int n) {
    Poly p;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < line.size() && isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    skip_ws();
    bool first = true;
    while (pos < line.size()) {
        int sign = 1;
        if (line[pos] == '+') {
            ++pos;
        } else if (line[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected sign at '" + line.substr(pos) + "'");
        }
        first = false;
        skip_ws();
        // optional coefficient
        Rat coef(1);
        if (pos < line.size() && isdigit(static_cast<unsigned char>(line[pos]))) {
            size_t q = pos;
            while (q < line.size() &&
                   (isdigit(static_cast<unsigned char>(line[q])) || line[q] == '/'))
                ++q;
            coef = Rat::from_string(line.substr(pos, q - pos));
            pos = q;
            skip_ws();
            if (pos < line.size() && line[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        // word: x.. [* x..]*
        Word w;
        while (pos < line.size() && line[pos] == 'x') {
            ++pos;
            if (pos + 1 >= line.size() || !isdigit(static_cast<unsigned char>(line[pos])) ||
                !isdigit(static_cast<unsigned char>(line[pos + 1])))
                throw std::invalid_argument("parse_poly: bad generator in '" + line + "'");
            int i = line[pos] - '0';
            int j = line[pos + 1] - '0';
            pos += 2;
            auto [g, s] = make_generator(i, j, n);
            if (s < 0) sign = -sign;
            w.push(g);
            skip_ws();
            if (pos < line.size() && line[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        Rat c = sign < 0 ? -coef : coef;
        p.t.emplace_back(w, c);
        skip_ws();
    }
    p.normalize();
    return p;
}

std::string emit_presentation(const Presentation& p) {
    std::string out;
    out += "family " + std::string(p.family == Family::E ? "E" : "D") + "\n";
    out += "n " + std::to_string(p.n) + "\n";
    if (p.family == Family::D) {
        out += "a1 " + p.a1.str() + "\n";
        out += "a2 " + p.a2.str() + "\n";
    }
    for (auto& r : p.relations) out += emit_poly(r, p.n) + "\n";
    return out;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    p.family = Family::D;
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "family") {
            std::string f;
            ls >> f;
            p.family = (f == "E") ? Family::E : Family::D;
        } else if (head == "n") {
            ls >> p.n;
            have_n = true;
        } else if (head == "a1") {
            std::string v;
            ls >> v;
            p.a1 = Rat::from_string(v);
        } else if (head == "a2") {
            std::string v;
            ls >> v;
            p.a2 = Rat::from_string(v);
        } else {
            if (!have_n) throw std::invalid_argument("parse_presentation: relations before n");
            p.relations.push_back(parse_poly(line, p.n));
        }
    }
    return p;
}

std::string Presentation::text() const { return emit_presentation(*this); }

uint64_t Presentation::key() const { return fnv1a(text()); }

}  // namespace fk

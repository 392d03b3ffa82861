#include "fk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fk {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > int(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Perm: not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

Perm Perm::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("Perm: bad transposition");
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (n() != o.n()) throw std::invalid_argument("Perm: size mismatch");
    Perm r(n());
    for (int i = 1; i <= n(); ++i) r.img_[i - 1] = (*this)(o(i));
    return r;
}

Perm Perm::inverse() const {
    Perm r(n());
    for (int i = 1; i <= n(); ++i) r.img_[img_[i - 1] - 1] = i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

std::string Perm::cycles() const {
    std::vector<bool> done(n(), false);
    std::string out;
    for (int i = 1; i <= n(); ++i) {
        if (done[i - 1] || img_[i - 1] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            done[j - 1] = true;
            j = img_[j - 1];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "e" : out;
}

Perm Perm::from_cycles(const std::string& s, int n) {
    Perm p(n);
    const std::string& t = s;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < t.size() && isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= t.size()) return p;
    if (t.substr(pos) == "e" || t.substr(pos) == "id" || t.substr(pos) == "()") return p;
    while (pos < t.size()) {
        skip_ws();
        if (pos >= t.size()) break;
        if (t[pos] != '(') throw std::invalid_argument("Perm: expected '(' in '" + s + "'");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos >= t.size()) throw std::invalid_argument("Perm: unterminated cycle in '" + s + "'");
            if (t[pos] == ')') { ++pos; break; }
            if (t[pos] == ',') { ++pos; continue; }
            size_t q = pos;
            while (q < t.size() && isdigit(static_cast<unsigned char>(t[q]))) ++q;
            if (q == pos) throw std::invalid_argument("Perm: bad cycle entry in '" + s + "'");
            int v = std::stoi(t.substr(pos, q - pos));
            if (v < 1 || v > n) throw std::invalid_argument("Perm: point out of range in '" + s + "'");
            cyc.push_back(v);
            pos = q;
        }
        if (cyc.size() < 2) continue;
        Perm c(n);
        for (size_t k = 0; k < cyc.size(); ++k) c.img_[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        p = c * p;
    }
    return p;
}

std::vector<Perm> Perm::symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace fk

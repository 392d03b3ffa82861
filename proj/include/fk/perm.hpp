#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fk {

// Permutation of {1..n}. Composition is right-to-left: (a*b)(i) = a(b(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(std::vector<int> images_1based);

    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int i, int j);
    static Perm from_cycles(const std::string& s, int n);  // "(1 3)(2 4)", "e"
    static std::vector<Perm> symmetric_group(int n);

    int n() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    bool is_identity() const;

    // Disjoint cycle notation, "e" for the identity; cycles ordered by
    // smallest moved point, each cycle starting at its smallest point.
    std::string cycles() const;

    const std::vector<int>& images() const { return img_; }

private:
    std::vector<int> img_;  // img_[i] = image of i+1, 1-based values
};

}  // namespace fk

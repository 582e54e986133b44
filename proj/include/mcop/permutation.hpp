#pragma once

// One-line permutations of {1,...,n}.
//
// Convention used across the library: a product of permutations acts as
// function composition evaluated right to left, i.e. (a*b)(x) = a(b(x)).
// Words of transpositions are therefore applied with the rightmost factor
// first, which matches how subset words are folded into permutations in
// pipedream.hpp.

#include <cassert>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace mcop {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(static_cast<size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 1);
    }
    explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {}

    static Permutation identity(int n) { return Permutation(n); }

    static Permutation transposition(int n, int a, int b) {
        Permutation t(n);
        std::swap(t.img_[static_cast<size_t>(a - 1)], t.img_[static_cast<size_t>(b - 1)]);
        return t;
    }

    int size() const { return static_cast<int>(img_.size()); }

    // w(x), 1-indexed.
    int operator()(int x) const {
        assert(x >= 1 && x <= size());
        return img_[static_cast<size_t>(x - 1)];
    }

    // Function composition: (*this ∘ rhs)(x) = (*this)(rhs(x)).
    Permutation compose(const Permutation& rhs) const {
        assert(size() == rhs.size());
        std::vector<int> r(img_.size());
        for (int x = 1; x <= size(); ++x) r[static_cast<size_t>(x - 1)] = (*this)(rhs(x));
        return Permutation(std::move(r));
    }

    // Right-multiply by the transposition (a b): swaps the entries at
    // positions a and b, i.e. this := this ∘ (a b).  Folding a word of
    // transpositions left to right with this operation yields exactly the
    // right-to-left evaluation described above.
    void apply_transposition_on_right(int a, int b) {
        std::swap(img_[static_cast<size_t>(a - 1)], img_[static_cast<size_t>(b - 1)]);
    }

    Permutation inverse() const {
        std::vector<int> r(img_.size());
        for (int x = 1; x <= size(); ++x) r[static_cast<size_t>((*this)(x)-1)] = x;
        return Permutation(std::move(r));
    }

    const std::vector<int>& one_line() const { return img_; }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    // Sign of the permutation sorting `tuple` ascending; tuple entries must
    // be pairwise distinct.  Returns +1/-1.
    static int sort_sign(const std::vector<int>& tuple) {
        int sign = 1;
        const size_t m = tuple.size();
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b) {
                assert(tuple[a] != tuple[b]);
                if (tuple[a] > tuple[b]) sign = -sign;
            }
        return sign;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (size_t t = 0; t < img_.size(); ++t) {
            if (t) os << ',';
            os << img_[t];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> img_;
};

}  // namespace mcop

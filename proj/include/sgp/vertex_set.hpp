#ifndef SGP_VERTEX_SET_HPP
#define SGP_VERTEX_SET_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sgp {

// Fixed-universe bitset over vertex ids. The solver ORs these heavily, so
// everything stays in packed 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    void add(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a |= b;
        return a;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    // this ∪ other == full universe?
    bool union_is_full(const VertexSet& o) const {
        for (std::size_t i = 0; i + 1 < words_.size(); ++i)
            if (~(words_[i] | o.words_[i]) != 0) return false;
        if (words_.empty()) return true;
        int tail = n_ & 63;
        std::uint64_t mask = tail == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail) - 1);
        return ((words_.back() | o.words_.back()) & mask) == mask;
    }

    bool is_full() const { return union_is_full(*this); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sgp

#endif  // SGP_VERTEX_SET_HPP

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qf {

using VertexId = std::uint32_t;

/// Dense bitset over vertex ids. Used for deletion sets and memo keys.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

    bool contains(VertexId v) const noexcept {
        const std::size_t w = v / 64;
        return w < words_.size() && ((words_[w] >> (v % 64)) & 1u) != 0;
    }

    void insert(VertexId v) {
        const std::size_t w = v / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (v % 64);
    }

    void erase(VertexId v) noexcept {
        const std::size_t w = v / 64;
        if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (v % 64));
    }

    VertexSet with(VertexId v) const {
        VertexSet copy = *this;
        copy.insert(v);
        return copy;
    }

    VertexSet& operator|=(const VertexSet& other) {
        if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
        for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    bool empty() const noexcept { return count() == 0; }

    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (unsigned b = 0; b < 64; ++b)
                if ((words_[w] >> b) & 1u) out.push_back(static_cast<VertexId>(w * 64 + b));
        return out;
    }

    // Equality ignores trailing zero words.
    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        const std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.word(i) != b.word(i)) return false;
        return true;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        std::size_t last = words_.size();
        while (last > 0 && words_[last - 1] == 0) --last;
        for (std::size_t i = 0; i < last; ++i) {
            h ^= std::hash<std::uint64_t>{}(words_[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace qf

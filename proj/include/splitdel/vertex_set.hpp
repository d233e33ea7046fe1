#ifndef SPLITDEL_VERTEX_SET_HPP
#define SPLITDEL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitdel {

using Vertex = int;

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

        Vertex operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next_after(pos_);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        int pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) {
            throw std::invalid_argument("negative vertex universe");
        }
    }
    VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) {
            insert(v);
        }
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) {
            s.insert(v);
        }
        return s;
    }

    template <class Range>
    static VertexSet from_range(int universe, const Range& members) {
        VertexSet s(universe);
        for (Vertex v : members) {
            s.insert(v);
        }
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
    }
    void insert(Vertex v) {
        check(v);
        words_[word(v)] |= mask(v);
    }
    void erase(Vertex v) {
        check(v);
        words_[word(v)] &= ~mask(v);
    }
    void clear() {
        for (auto& w : words_) {
            w = 0;
        }
    }

    int size() const {
        int total = 0;
        for (auto w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    bool empty() const {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    VertexSet& operator&=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= other.words_[i];
        }
        return *this;
    }
    VertexSet& operator|=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
        }
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~other.words_[i];
        }
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) {
                return false;
            }
        }
        return true;
    }
    bool intersects(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & other.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }

    std::optional<Vertex> first() const {
        Vertex v = next_after(-1);
        if (v >= universe_) {
            return std::nullopt;
        }
        return v;
    }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    const_iterator begin() const { return {this, next_after(-1)}; }
    const_iterator end() const { return {this, universe_}; }

    bool operator==(const VertexSet& other) const = default;

    /// Lexicographic order on the ascending member lists.
    bool lex_less(const VertexSet& other) const {
        auto a = to_vector();
        auto b = other.to_vector();
        return a < b;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first_member = true;
        for (Vertex v : *this) {
            if (!first_member) {
                out += ",";
            }
            out += std::to_string(v);
            first_member = false;
        }
        return out + "}";
    }

private:
    static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) / 64; }
    static unsigned bit(Vertex v) { return static_cast<unsigned>(v) % 64; }
    static std::uint64_t mask(Vertex v) { return std::uint64_t{1} << bit(v); }

    void check(Vertex v) const {
        if (v < 0 || v >= universe_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe_));
        }
    }
    void same_universe(const VertexSet& other) const {
        if (other.universe_ != universe_) {
            throw std::invalid_argument("vertex sets over different universes");
        }
    }

    Vertex next_after(Vertex v) const {
        int start = v + 1;
        if (start >= universe_) {
            return universe_;
        }
        std::size_t w = word(start);
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << bit(start));
        while (true) {
            if (bits != 0) {
                Vertex found = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                return found < universe_ ? found : universe_;
            }
            if (++w >= words_.size()) {
                return universe_;
            }
            bits = words_[w];
        }
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace splitdel

#endif // SPLITDEL_VERTEX_SET_HPP

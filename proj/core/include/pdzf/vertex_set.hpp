#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pdzf {

using Vertex = std::size_t;

/// A subset of the vertex range [0, n) for a fixed ambient n.
///
/// Binary set operations require both operands to share the same ambient
/// size. Iteration visits members in increasing id order.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const Bits* bits, Vertex pos) : bits_(bits), pos_(pos) {}

        Vertex operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = bits_->find_next(pos_);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const Bits* bits_ = nullptr;
        Vertex pos_ = Bits::npos;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t ambient) : bits_(ambient) {}
    explicit VertexSet(Bits bits) : bits_(std::move(bits)) {}

    /// Throws InputError if any member is outside [0, ambient).
    static VertexSet of(std::size_t ambient, std::span<const Vertex> members);
    static VertexSet of(std::size_t ambient, std::initializer_list<Vertex> members);
    static VertexSet full(std::size_t ambient);

    std::size_t ambient() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool is_full() const noexcept { return bits_.all(); }

    bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
    void insert(Vertex v) { bits_.set(v); }
    void erase(Vertex v) { bits_.reset(v); }

    /// Smallest member, or ambient() when empty.
    Vertex first() const noexcept {
        auto p = bits_.find_first();
        return p == Bits::npos ? bits_.size() : p;
    }

    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const { return VertexSet(~bits_); }

    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    /// Lexicographic order on the sorted member sequences.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    const_iterator begin() const { return {&bits_, bits_.find_first()}; }
    const_iterator end() const { return {&bits_, Bits::npos}; }

    std::vector<Vertex> to_vector() const;
    /// "{0,3,5}"
    std::string to_string() const;

    const Bits& bits() const noexcept { return bits_; }

private:
    Bits bits_;
};

/// Orders sets by cardinality first, then lexicographically.
struct ShortlexLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    }
};

}  // namespace pdzf

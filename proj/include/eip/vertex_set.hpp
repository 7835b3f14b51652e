#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace eip {

/// A subset of {0, ..., n-1} stored as a packed bit vector.
///
/// All binary operations require both operands to share the same universe
/// size; the word layout is little-endian by vertex label (vertex v lives in
/// word v / 64, bit v % 64).
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    /// Builds a set from the low `universe` bits of `mask` (universe <= 64).
    static VertexSet from_mask(int universe, std::uint64_t mask);
    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const;

    bool contains(int v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void insert(int v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(int v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    /// |*this ∩ other| without materialising the intersection.
    int intersection_size(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& other) const;

    /// Members in increasing label order.
    std::vector<int> members() const;

    /// Low 64 bits; only meaningful when universe <= 64.
    std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

    /// Big-endian hexadecimal rendering of the bit encoding, e.g. "0x1f".
    std::string to_hex() const;
    static VertexSet from_hex(int universe, const std::string& hex);

    const std::vector<Word>& words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check_same_universe(const VertexSet& other) const;

    int universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace eip

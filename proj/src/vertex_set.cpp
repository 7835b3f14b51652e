#include "eip/vertex_set.hpp"

#include <algorithm>
#include <cctype>

#include "eip/errors.hpp"

namespace eip {

namespace {

int word_count(int universe) { return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw InputError("negative universe size");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::vector<int>(members)) {}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
        insert(v);
    }
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > kWordBits) throw InputError("mask construction needs universe <= 64");
    VertexSet s(universe);
    if (universe < kWordBits) mask &= (Word{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    if (universe % kWordBits != 0) s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
    return s;
}

int VertexSet::size() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw InputError("vertex sets over different universes");
}

int VertexSet::intersection_size(const VertexSet& other) const {
    check_same_universe(other);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & other.words_[i]);
    return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string VertexSet::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string digits;
    for (int v = 0; v < universe_; v += 4) {
        int nibble = 0;
        for (int b = 0; b < 4 && v + b < universe_; ++b)
            if (contains(v + b)) nibble |= 1 << b;
        digits.push_back(kDigits[nibble]);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (digits.empty()) digits = "0";
    std::reverse(digits.begin(), digits.end());
    return "0x" + digits;
}

VertexSet VertexSet::from_hex(int universe, const std::string& hex) {
    std::string body = hex;
    if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) body = body.substr(2);
    if (body.empty()) throw InputError("empty hex bitmask");
    VertexSet s(universe);
    int bit = 0;
    for (auto it = body.rbegin(); it != body.rend(); ++it, bit += 4) {
        int c = std::tolower(static_cast<unsigned char>(*it));
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else throw InputError("bad hex digit in '" + hex + "'");
        for (int b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1)) continue;
            if (bit + b >= universe) throw InputError("hex bitmask '" + hex + "' exceeds universe");
            s.insert(bit + b);
        }
    }
    return s;
}

}  // namespace eip

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace orelab {

/// Element id inside a finite ring. Ids are positional: 0 .. size-1.
using Elem = std::uint32_t;

/// Fixed-universe bit set over element ids. Used for multiplicative sets,
/// ideals and every other subset of a finite ring.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Elem> members)
        : ElementSet(universe) {
        for (Elem e : members) insert(e);
    }
    static ElementSet from_vector(std::size_t universe, const std::vector<Elem>& members) {
        ElementSet s(universe);
        for (Elem e : members) s.insert(e);
        return s;
    }
    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(Elem e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
    void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const ElementSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

    /// Complement inside the universe.
    ElementSet complement() const {
        ElementSet c(universe_);
        for (std::size_t i = 0; i < universe_; ++i)
            if (!contains(static_cast<Elem>(i))) c.insert(static_cast<Elem>(i));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    /// Sorted member list (the serialization order used by every report).
    std::vector<Elem> to_vector() const {
        std::vector<Elem> v;
        v.reserve(size());
        for_each([&](Elem e) { v.push_back(e); });
        return v;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](Elem e) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        });
        return s + "}";
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Lexicographic order on sorted member lists.
    friend bool operator<(const ElementSet& a, const ElementSet& b) {
        return a.to_vector() < b.to_vector();
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace orelab

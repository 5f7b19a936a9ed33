#pragma once

// Internal dense fact-id sets and the fact interner used by the
// transversal/closure cores. Not part of the public headers.

#include "repairforge/core_model.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace repairforge::detail {

/** A set of fact ids over a fixed small universe, stored as a bitset. */
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

    void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void erase(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool contains(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }

    bool subsetOf(const IndexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    bool intersects(const IndexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    IndexSet& operator|=(const IndexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    IndexSet& operator&=(const IndexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    IndexSet minus(std::uint32_t i) const {
        IndexSet r = *this;
        r.erase(i);
        return r;
    }

    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                out.push_back(static_cast<std::uint32_t>(w * 64 + b));
                word &= word - 1;
            }
        }
        return out;
    }

    bool operator==(const IndexSet& other) const { return words_ == other.words_; }

    /** (cardinality, lexicographic on ascending ids) — the canonical order. */
    static bool canonicalLess(const IndexSet& a, const IndexSet& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        // lexicographic on ascending element lists: the set owning the
        // smallest element of the symmetric difference comes first
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t low = diff & ~(diff - 1);
                return a.words_[i] & low;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

/** Maps facts to dense ids in canonical fact order and back. */
class FactInterner {
public:
    explicit FactInterner(const FactSet& facts) : facts_(facts.begin(), facts.end()) {
        for (std::uint32_t i = 0; i < facts_.size(); ++i) ids_.emplace(facts_[i], i);
    }

    std::size_t size() const { return facts_.size(); }
    const Fact& fact(std::uint32_t id) const { return facts_[id]; }

    std::uint32_t id(const Fact& f) const { return ids_.at(f); }
    bool known(const Fact& f) const { return ids_.count(f) != 0; }

    IndexSet intern(const FactSet& facts) const {
        IndexSet s(size());
        for (const Fact& f : facts) s.insert(id(f));
        return s;
    }

    FactSet extern_(const IndexSet& s) const {
        FactSet out;
        for (std::uint32_t i : s.elements()) out.insert(facts_[i]);
        return out;
    }

private:
    std::vector<Fact> facts_;
    std::map<Fact, std::uint32_t> ids_;
};

}  // namespace repairforge::detail

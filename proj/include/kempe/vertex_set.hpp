#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kempe {

/// Dense bitset over the vertex indices 0..universe-1 of some graph.
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(int universe) :
        universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
    {
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    static auto of(int universe, std::span<const int> members) -> VertexSet
    {
        VertexSet s(universe);
        for (int v : members)
            s.insert(v);
        return s;
    }

    static auto full(int universe) -> VertexSet
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    auto universe() const -> int { return universe_; }

    auto insert(int v) -> void
    {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] |= bit(v);
    }

    auto erase(int v) -> void
    {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v);
    }

    auto contains(int v) const -> bool
    {
        if (v < 0 || v >= universe_)
            return false;
        return (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0;
    }

    auto size() const -> int
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    auto empty() const -> bool
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    auto first() const -> int
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return -1;
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    auto members() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    auto intersects(const VertexSet & other) const -> bool
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Orders by smallest member first (then by the full member list).
    friend auto operator<(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.members() < b.members();
    }

  private:
    static auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace kempe

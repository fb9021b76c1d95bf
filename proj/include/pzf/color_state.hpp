#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pzf {

using Vertex = std::uint32_t;

/**
 * The set of blue vertices of a graph with n vertices, stored as a
 * multi-word bit vector. Bits at positions >= n are always zero, so two
 * states of the same width compare equal exactly when they hold the same
 * vertex set.
 */
class ColorState
{
public:
    using Word = std::uint64_t;
    static constexpr unsigned bits_per_word = 64;

    ColorState() = default;
    explicit ColorState(std::size_t n);

    static ColorState empty(std::size_t n) { return ColorState(n); }
    static ColorState full(std::size_t n);
    static ColorState singleton(std::size_t n, Vertex v);
    static ColorState from_vertices(std::size_t n, std::span<const Vertex> vs);
    static ColorState from_mask(std::size_t n, std::uint64_t mask);

    /// Parses "0x.." (most significant digit first). Throws std::invalid_argument
    /// on bad digits or bits beyond n.
    static ColorState from_hex(std::size_t n, std::string_view hex);

    std::size_t size() const { return n_; }

    bool test(Vertex v) const { return (words_[v / bits_per_word] >> (v % bits_per_word)) & 1U; }
    void set(Vertex v) { words_[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
    void reset(Vertex v) { words_[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }

    std::size_t count() const;
    bool none() const;
    bool all() const { return count() == n_; }

    bool is_subset_of(const ColorState& other) const;

    ColorState& operator|=(const ColorState& other);
    ColorState& operator&=(const ColorState& other);
    friend ColorState operator|(ColorState a, const ColorState& b) { return a |= b; }
    friend ColorState operator&(ColorState a, const ColorState& b) { return a &= b; }

    /// Complement within [0, n).
    ColorState complement() const;

    std::vector<Vertex> vertices() const;

    /// Low 64 bits; only meaningful when size() <= 64.
    std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

    /// Lowercase hex with "0x" prefix and no leading zeros ("0x0" when empty).
    std::string to_hex() const;

    /// Set-notation rendering, e.g. "{0,2,5}".
    std::string to_set_string() const;

    std::span<const Word> words() const { return words_; }

    friend bool operator==(const ColorState&, const ColorState&) = default;

    /// Orders by width, then by the bit vector read as an unsigned integer.
    friend bool operator<(const ColorState& a, const ColorState& b);

private:
    std::size_t n_ = 0;
    std::vector<Word> words_;
};

} // namespace pzf

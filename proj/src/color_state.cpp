#include "pzf/color_state.hpp"

#include <bit>
#include <stdexcept>

namespace pzf {

ColorState::ColorState(std::size_t n) : n_(n), words_((n + bits_per_word - 1) / bits_per_word, 0) {}

ColorState ColorState::full(std::size_t n)
{
    ColorState s(n);
    for (auto& w : s.words_)
        w = ~Word{0};
    if (n % bits_per_word != 0)
        s.words_.back() = (Word{1} << (n % bits_per_word)) - 1;
    return s;
}

ColorState ColorState::singleton(std::size_t n, Vertex v)
{
    if (v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    ColorState s(n);
    s.set(v);
    return s;
}

ColorState ColorState::from_vertices(std::size_t n, std::span<const Vertex> vs)
{
    ColorState s(n);
    for (auto v : vs) {
        if (v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        s.set(v);
    }
    return s;
}

ColorState ColorState::from_mask(std::size_t n, std::uint64_t mask)
{
    if (n < 64 && (mask >> n) != 0)
        throw std::invalid_argument("mask has bits beyond n");
    ColorState s(n);
    if (!s.words_.empty())
        s.words_[0] = mask;
    return s;
}

ColorState ColorState::from_hex(std::size_t n, std::string_view hex)
{
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.empty())
        throw std::invalid_argument("empty hex bitset");
    ColorState s(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        char c = *it;
        unsigned d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
        for (unsigned k = 0; k < 4; ++k) {
            if (!((d >> k) & 1U))
                continue;
            if (bit + k >= n)
                throw std::invalid_argument("hex bitset has bits beyond n=" + std::to_string(n));
            s.set(static_cast<Vertex>(bit + k));
        }
    }
    return s;
}

std::size_t ColorState::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool ColorState::none() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

bool ColorState::is_subset_of(const ColorState& other) const
{
    if (n_ != other.n_)
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

ColorState& ColorState::operator|=(const ColorState& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("ColorState width mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

ColorState& ColorState::operator&=(const ColorState& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("ColorState width mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

ColorState ColorState::complement() const
{
    ColorState f = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        f.words_[i] &= ~words_[i];
    return f;
}

std::vector<Vertex> ColorState::vertices() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * bits_per_word + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string ColorState::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (auto it = words_.rbegin(); it != words_.rend(); ++it) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            unsigned d = (*it >> shift) & 0xFU;
            if (leading && d == 0)
                continue;
            leading = false;
            out.push_back(digits[d]);
        }
    }
    if (out.empty())
        out = "0";
    return "0x" + out;
}

std::string ColorState::to_set_string() const
{
    std::string out = "{";
    bool first = true;
    for (auto v : vertices()) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool operator<(const ColorState& a, const ColorState& b)
{
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i])
            return a.words_[i] < b.words_[i];
    return false;
}

} // namespace pzf

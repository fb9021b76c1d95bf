#include "pzf/random.hpp"

namespace pzf {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return mix64(mix64(master) ^ mix64(index ^ 0x6a09e667f3bcc909ULL));
}

std::uint64_t UniformStream::bits(std::uint64_t key, std::uint64_t time) const
{
    // Nested mixing keeps (key, time) and (time, key) apart.
    return mix64(seed_ ^ mix64(key ^ mix64(time + 0x3c6ef372fe94f82bULL)));
}

double UniformStream::uniform(std::uint64_t key, std::uint64_t time) const
{
    return static_cast<double>(bits(key, time) >> 11) * 0x1.0p-53;
}

} // namespace pzf

#pragma once

#include <cstdint>
#include <string>

#include <graphlabel/error.hpp>

namespace graphlabel {

// Bit strings are held as '0'/'1' characters: trivially serializable, easy to
// inspect, and size() is the length in bits. All label/sketch sizes reported
// by this library count these bits.
using Bits = std::string;

inline int ceil_log2(std::uint64_t x)
{
    int bits = 0;
    while ((std::uint64_t{1} << bits) < x)
        ++bits;
    return bits;
}

inline void append_bits(Bits & out, std::uint64_t value, int width)
{
    for (int i = width - 1; i >= 0; --i)
        out.push_back((value >> i) & 1 ? '1' : '0');
}

inline std::uint64_t read_bits(const Bits & in, std::size_t & pos, int width)
{
    if (pos + width > in.size())
        throw Error("bit string truncated");
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i)
        value = (value << 1) | (in[pos++] == '1' ? 1 : 0);
    return value;
}

// LEB128-style varint: 7-bit groups, low group first, continuation bit ahead
// of each group.
inline void append_varint(Bits & out, std::uint64_t value)
{
    do {
        std::uint64_t group = value & 0x7f;
        value >>= 7;
        out.push_back(value != 0 ? '1' : '0');
        append_bits(out, group, 7);
    } while (value != 0);
}

inline std::uint64_t read_varint(const Bits & in, std::size_t & pos)
{
    std::uint64_t value = 0;
    int shift = 0;
    bool more = true;
    while (more) {
        if (pos + 8 > in.size())
            throw Error("bit string truncated");
        more = in[pos++] == '1';
        std::uint64_t group = read_bits(in, pos, 7);
        value |= group << shift;
        shift += 7;
        if (shift > 63 && more)
            throw Error("varint overflow");
    }
    return value;
}

} // namespace graphlabel

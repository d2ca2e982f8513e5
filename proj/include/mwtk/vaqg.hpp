#pragma once

// Values-attached quotient graphs and their wire format.  A query is a
// quotient graph whose vertices carry value tuples; the oracle answers with
// the tuple of the whole module the quotient stands for.
//
// Encoding, most-significant bit first throughout:
//   16 bits  t   number of quotient vertices (at least 2)
//   8 bits   r   tuple arity (fixed by the value system)
//   8 bits   w   bits per value, ceil(log2(n+1)) for the solve-level order n
//   t(t-1)/2 bits upper-triangle adjacency, pairs (0,1),(0,2),...,(t-2,t-1)
//   t*r*w bits   tuples in vertex order, each value w bits
//   optional: 1 flag bit set to 1, then r*w bits of candidate tuple
//   zero padding to a byte boundary

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwtk/graph.hpp"
#include "mwtk/value_system.hpp"

namespace mwtk {

struct Vaqg {
    Graph quotient;
    std::vector<ValueTuple> tuples;
    SystemId system;
};

struct EncodedQuery {
    std::vector<std::uint8_t> bytes;
    int bit_len;
};

namespace wire_detail {

struct BitWriter {
    std::vector<std::uint8_t> bytes;
    int bits = 0;

    void push(std::uint32_t value, int count) {
        for (int i = count - 1; i >= 0; --i) {
            if (bits % 8 == 0) bytes.push_back(0);
            if ((value >> i) & 1) bytes.back() |= std::uint8_t(0x80) >> (bits % 8);
            ++bits;
        }
    }
};

struct BitReader {
    const std::vector<std::uint8_t>& bytes;
    int pos = 0;

    int total() const { return int(bytes.size()) * 8; }

    std::uint32_t pull(int count) {
        if (pos + count > total()) throw malformed_query("query truncated");
        std::uint32_t value = 0;
        for (int i = 0; i < count; ++i) {
            value = (value << 1) | ((bytes[pos / 8] >> (7 - pos % 8)) & 1);
            ++pos;
        }
        return value;
    }
};

}  // namespace wire_detail

inline int value_bits_for_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    int w = 1;
    while ((std::uint64_t(1) << w) < std::uint64_t(n) + 1) ++w;
    return w;
}

inline int query_bit_length(int t, int r, int w, bool with_candidate) {
    int bits = 32 + t * (t - 1) / 2 + t * r * w;
    if (with_candidate) bits += 1 + r * w;
    return bits;
}

inline EncodedQuery encode_query(const Vaqg& q, const std::optional<ValueTuple>& candidate, int n) {
    int t = q.quotient.vertex_count();
    int r = tuple_arity(q.system);
    int w = value_bits_for_order(n);
    if (t < 2) throw std::invalid_argument("query needs at least two quotient vertices");
    if (t > 0xFFFF) throw std::invalid_argument("quotient too large to encode");
    if (int(q.tuples.size()) != t) throw std::invalid_argument("one tuple per quotient vertex required");

    wire_detail::BitWriter out;
    out.push(std::uint32_t(t), 16);
    out.push(std::uint32_t(r), 8);
    out.push(std::uint32_t(w), 8);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) out.push(q.quotient.has_edge(i, j) ? 1 : 0, 1);
    auto push_tuple = [&](const ValueTuple& tup) {
        if (int(tup.size()) != r) throw std::invalid_argument("tuple arity mismatch");
        for (int v : tup) {
            if (v < 0 || std::uint64_t(v) >= (std::uint64_t(1) << w))
                throw std::invalid_argument("value does not fit in the advertised width");
            out.push(std::uint32_t(v), w);
        }
    };
    for (const ValueTuple& tup : q.tuples) push_tuple(tup);
    if (candidate) {
        out.push(1, 1);
        push_tuple(*candidate);
    }
    return {out.bytes, out.bits};
}

struct DecodedQuery {
    Vaqg vaqg;
    std::optional<ValueTuple> candidate;
};

inline DecodedQuery decode_query(const std::vector<std::uint8_t>& bytes, SystemId system) {
    wire_detail::BitReader in{bytes};
    int t = int(in.pull(16));
    int r = int(in.pull(8));
    int w = int(in.pull(8));
    if (t < 2) throw malformed_query("quotient needs at least two vertices");
    if (r != tuple_arity(system)) throw malformed_query("arity does not match the value system");
    if (w < 1 || w > 31) throw malformed_query("value width out of range");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (in.pull(1)) edges.emplace_back(i, j);
    std::vector<ValueTuple> tuples;
    for (int i = 0; i < t; ++i) {
        ValueTuple tup(r);
        for (int k = 0; k < r; ++k) tup[k] = int(in.pull(w));
        validate_tuple(system, tup);
        tuples.push_back(std::move(tup));
    }
    std::optional<ValueTuple> candidate;
    if (in.pos < in.total() && in.pull(1)) {
        ValueTuple tup(r);
        for (int k = 0; k < r; ++k) tup[k] = int(in.pull(w));
        candidate = std::move(tup);
    }
    if (in.total() - in.pos >= 8) throw malformed_query("trailing bytes after the query");
    while (in.pos < in.total())
        if (in.pull(1)) throw malformed_query("nonzero padding");
    return {Vaqg{Graph(t, edges), std::move(tuples), system}, std::move(candidate)};
}

inline std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

inline std::vector<std::uint8_t> from_hex(const std::string& text) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    if (text.size() % 2) throw std::invalid_argument("odd hex length");
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < text.size(); i += 2)
        out.push_back(std::uint8_t(nibble(text[i]) << 4 | nibble(text[i + 1])));
    return out;
}

}  // namespace mwtk

#include "q2/graph6.hpp"

namespace q2 {

namespace {
constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((group << (6 - nbits)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view s) {
    std::size_t base = 0;
    if (s.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::size_t pos = base;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) throw ParseError("graph6: truncated input", s.size());
    };
    auto byte = [&](std::size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < kBias || c > 126) throw ParseError("graph6: byte out of range", i);
        return static_cast<int>(c) - kBias;
    };
    need(1);
    long n;
    if (static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        need(3);
        n = (static_cast<long>(byte(pos)) << 12) | (byte(pos + 1) << 6) | byte(pos + 2);
        pos += 3;
    } else {
        n = byte(pos);
        ++pos;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " exceeds cap 64", base);
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long consumed = 0;
    int group = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                need(1);
                group = byte(pos);
                ++pos;
                avail = 6;
            }
            if ((group >> (avail - 1)) & 1) g.add_edge(i, j);
            --avail;
            ++consumed;
        }
    (void)nbits;
    (void)consumed;
    if (pos != s.size()) throw ParseError("graph6: trailing bytes", pos);
    return g;
}

}  // namespace q2

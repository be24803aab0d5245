// graph6 and adjacency-list text encodings. The graph6 writer/reader follows
// the standard format description (McKay): header N(n) in printable bytes
// 63..126, then the upper triangle of the adjacency matrix in column-major
// order packed six bits per byte, zero-padded.
#include "powpath/graphs.hpp"

#include <cctype>
#include <sstream>

namespace powpath {

namespace {

void append_six_bit_groups(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size() && bits[i + j]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 4-byte header: '~' then n in 18 bits, high group first.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    }
    append_six_bit_groups(out, bits);
    return out;
}

Graph from_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= text.size()) throw domain_error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) {
            throw domain_error("graph6: byte out of range at position " + std::to_string(pos - 1));
        }
        return c - 63;
    };

    long long n;
    int head = take();
    if (head < 63) {
        n = head;
    } else {
        // '~' introducer. The 8-byte long form ('~~') is out of scope.
        if (pos < text.size() && text[pos] == '~') {
            throw domain_error("graph6: long form (n > 258047) not supported");
        }
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
    if (n > Graph::kMaxVertices) {
        throw domain_error("graph6: order " + std::to_string(n) + " exceeds vertex cap");
    }

    Graph g(static_cast<int>(n));
    int group = 0;
    int group_bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (group_bits == 0) {
                group = take();
                group_bits = 6;
            }
            group_bits -= 1;
            if ((group >> group_bits) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits of the final group must be zero and nothing may follow.
    if (group_bits > 0 && (group & ((1 << group_bits) - 1)) != 0) {
        throw domain_error("graph6: nonzero padding bits");
    }
    if (pos != text.size()) throw domain_error("graph6: trailing bytes");
    return g;
}

std::string to_adjacency_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (int u = 0; u < g.order(); ++u) {
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            os << u << ' ' << v << '\n';
        }
    }
    return os.str();
}

Graph from_adjacency_list(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    bool explicit_n = false;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "n") {
            if (!(ls >> n) || n < 0) throw domain_error("adjacency list: bad vertex count");
            explicit_n = true;
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw domain_error("adjacency list: bad token '" + first + "'");
        }
        if (!(ls >> v)) throw domain_error("adjacency list: missing second endpoint");
        if (u < 0 || v < 0) throw domain_error("adjacency list: negative vertex index");
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    if (explicit_n) {
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) throw domain_error("adjacency list: index beyond declared count");
        }
    }
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace powpath

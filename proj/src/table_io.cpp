#include <cstring>
#include <istream>
#include <ostream>

#include "pursuit/graph_io.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

// Layout (all integers little-endian):
//   8 bytes  magic "PURSTBL1"
//   u8       game kind (0 classic, 1 attacking)
//   u8       k
//   u16      reserved (0)
//   u32      n
//   u32      graph6 length, followed by that many graph6 bytes
//   (k+1) x u64   label count per layer 0..k (0 = layer absent)
//   the layers' u32 labels, in order
namespace {

constexpr char kMagic[8] = {'P', 'U', 'R', 'S', 'T', 'B', 'L', '1'};

template <typename T>
void put(std::ostream& out, T value) {
    unsigned char bytes[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) bytes[i] = (value >> (8 * i)) & 0xFF;
    out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    unsigned char bytes[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T)))
        throw std::runtime_error("truncated solve table");
    T value = 0;
    for (size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
    return value;
}

}  // namespace

void write_solve_table(const SolveTable& table, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    put<uint8_t>(out, table.game() == GameKind::Attacking ? 1 : 0);
    put<uint8_t>(out, static_cast<uint8_t>(table.k()));
    put<uint16_t>(out, 0);
    put<uint32_t>(out, static_cast<uint32_t>(table.n()));
    std::string g6 = encode_graph6(table.graph());
    put<uint32_t>(out, static_cast<uint32_t>(g6.size()));
    out.write(g6.data(), static_cast<std::streamsize>(g6.size()));
    for (int j = 0; j <= table.k(); ++j)
        put<uint64_t>(out, static_cast<uint64_t>(table.raw_level(j).size()));
    for (int j = 0; j <= table.k(); ++j)
        for (uint32_t v : table.raw_level(j)) put<uint32_t>(out, v);
    if (!out) throw std::runtime_error("failed writing solve table");
}

SolveTable read_solve_table(std::istream& in) {
    char magic[8];
    if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("not a solve table dump");
    uint8_t game = get<uint8_t>(in);
    if (game > 1) throw std::runtime_error("unknown game kind in solve table");
    int k = get<uint8_t>(in);
    get<uint16_t>(in);
    uint32_t n = get<uint32_t>(in);
    uint32_t g6len = get<uint32_t>(in);
    if (g6len > (1u << 24)) throw std::runtime_error("oversized graph in solve table");
    std::string g6(g6len, '\0');
    if (!in.read(g6.data(), g6len)) throw std::runtime_error("truncated solve table");
    Graph g = parse_graph6(g6);
    if (g.vertex_count() != static_cast<int>(n))
        throw std::runtime_error("vertex count mismatch in solve table");

    SolveTable table(game == 1 ? GameKind::Attacking : GameKind::Classic, g, k);
    std::vector<uint64_t> counts(k + 1);
    for (int j = 0; j <= k; ++j) {
        counts[j] = get<uint64_t>(in);
        uint64_t expect = table.index(j).count() * static_cast<uint64_t>(n) * 2;
        if (counts[j] != 0 && counts[j] != expect)
            throw std::runtime_error("layer size mismatch in solve table");
    }
    for (int j = 0; j <= k; ++j) {
        auto& level = table.levels_[j];
        level.resize(counts[j]);
        for (auto& v : level) v = get<uint32_t>(in);
    }
    return table;
}

}  // namespace pursuit

#include "dioph/graphio.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dioph/maximal.hpp"

namespace dioph {

ParseError::ParseError(int line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

constexpr int kMaterializeCap = 4096;

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
    std::optional<SimpleGraph> graph;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;

        if (!graph) {
            int n = 0;
            if (tokens.size() != 2 || tokens[0] != "p" || !parse_int(tokens[1], n))
                throw ParseError(line_no, "expected header 'p <n>'");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            graph.emplace(n);
            continue;
        }

        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError(line_no, "malformed edge line, expected 'u v'");
        if (u < 1 || u > graph->order() || v < 1 || v > graph->order())
            throw ParseError(line_no, "endpoint out of range");
        if (u == v) throw ParseError(line_no, "loop edge");
        if (graph->has_edge(u, v)) throw ParseError(line_no, "duplicate edge");
        graph->add_edge(u, v);
    }
    if (!graph) throw ParseError(line_no, "missing header 'p <n>'");
    return *graph;
}

std::string emit_edge_list(const SimpleGraph& graph) {
    std::ostringstream os;
    os << "p " << graph.order() << '\n';
    for (const auto& [u, v] : graph.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string emit_dot(const SimpleGraph& graph, const Labelling* labelling) {
    if (labelling && (labelling->order() != graph.order() || !labelling->is_bijective()))
        throw std::invalid_argument("emit_dot: labelling is not a bijection onto {1..n}");
    auto name = [&](int v) { return labelling ? labelling->label_of(v) : v; };
    std::ostringstream os;
    os << "graph {\n";
    os << "  node [shape=circle];\n";
    for (int v = 1; v <= graph.order(); ++v) os << "  " << name(v) << ";\n";
    for (const auto& [u, v] : graph.edges()) os << "  " << name(u) << " -- " << name(v) << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

SimpleGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("generate: path needs parameter >= 1");
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("generate: cycle needs parameter >= 3");
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    return g;
}

SimpleGraph make_star(int n) {
    if (n < 2) throw std::invalid_argument("generate: star needs parameter >= 2");
    SimpleGraph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(1, v);
    return g;
}

SimpleGraph make_wheel(int n) {
    if (n < 4) throw std::invalid_argument("generate: wheel needs parameter >= 4");
    SimpleGraph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(1, v);
    for (int v = 2; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 2);
    return g;
}

SimpleGraph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("generate: complete needs parameter >= 1");
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph make_petersen() {
    // outer cycle 1..5, inner pentagram 6..10, spokes i -- i+5
    SimpleGraph g(10);
    for (int v = 1; v < 5; ++v) g.add_edge(v, v + 1);
    g.add_edge(5, 1);
    for (int v = 1; v <= 5; ++v) g.add_edge(v, v + 5);
    for (int v = 0; v < 5; ++v) g.add_edge(6 + v, 6 + (v + 2) % 5);
    return g;
}

SimpleGraph make_maximal(int n, GraphKind kind) {
    if (n < 1) throw std::invalid_argument("generate: maximal graphs need parameter >= 1");
    if (n > kMaterializeCap)
        throw std::invalid_argument("generate: maximal graphs are materialized only up to 4096 vertices");
    const auto spec = make_maximal_spec(static_cast<u64>(n), kind);
    SimpleGraph g(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (is_adjacent(static_cast<u64>(a), static_cast<u64>(b), spec)) g.add_edge(a, b);
    return g;
}

}  // namespace

SimpleGraph generate(std::string_view name, int parameter) {
    if (name == "petersen") {
        if (parameter != 0) throw std::invalid_argument("generate: petersen takes no parameter");
        return make_petersen();
    }
    if (name == "path") return make_path(parameter);
    if (name == "cycle") return make_cycle(parameter);
    if (name == "star") return make_star(parameter);
    if (name == "wheel") return make_wheel(parameter);
    if (name == "complete") return make_complete(parameter);
    if (name == "maximal_diophantine") return make_maximal(parameter, GraphKind::diophantine);
    if (name == "maximal_prime") return make_maximal(parameter, GraphKind::prime);
    throw std::invalid_argument("generate: unknown graph name '" + std::string(name) + "'");
}

}  // namespace dioph

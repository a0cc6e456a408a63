#include "qfr/quiver_file.hpp"

#include <sstream>
#include <vector>

#include "qfr/errors.hpp"

namespace qfr {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;  // rest of line is a comment
        out.push_back(tok);
    }
    return out;
}

int parse_vertex(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a vertex number, got '" + tok + "'");
    }
}

} // namespace

Quiver parse_quiver(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    int lineno = 0;
    int vertex_count = -1;
    std::vector<Arrow> arrows;
    std::vector<std::string> seen_ids;

    while (std::getline(input, line)) {
        ++lineno;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;

        if (toks[0] == "vertices") {
            if (vertex_count >= 0) throw ParseError(lineno, "duplicate 'vertices' line");
            if (toks.size() != 2) throw ParseError(lineno, "expected 'vertices <count>'");
            vertex_count = parse_vertex(toks[1], lineno);
            if (vertex_count < 1) throw ParseError(lineno, "vertex count must be >= 1");
        } else if (toks[0] == "arrow") {
            if (vertex_count < 0)
                throw ParseError(lineno, "'arrow' before 'vertices'");
            if (toks.size() != 5 || toks[3] != "->")
                throw ParseError(lineno, "expected 'arrow <id> <tail> -> <head>'");
            const std::string& id = toks[1];
            for (const std::string& prev : seen_ids)
                if (prev == id) throw ParseError(lineno, "duplicate arrow id '" + id + "'");
            const int tail = parse_vertex(toks[2], lineno);
            const int head = parse_vertex(toks[4], lineno);
            if (tail < 1 || tail > vertex_count)
                throw ParseError(lineno, "unknown vertex " + std::to_string(tail));
            if (head < 1 || head > vertex_count)
                throw ParseError(lineno, "unknown vertex " + std::to_string(head));
            seen_ids.push_back(id);
            arrows.push_back({id, tail, head});
        } else {
            throw ParseError(lineno, "unrecognized directive '" + toks[0] + "'");
        }
    }

    if (vertex_count < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'vertices' line");
    return Quiver(vertex_count, std::move(arrows));
}

std::string serialize_quiver(const Quiver& q) {
    std::ostringstream os;
    os << "vertices " << q.vertex_count() << "\n";
    for (const Arrow& a : q.arrows())
        os << "arrow " << a.id << " " << a.tail << " -> " << a.head << "\n";
    return os.str();
}

} // namespace qfr

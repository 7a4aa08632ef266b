#include "brg/graph_text.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace brg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct RawEnd {
    std::string edge;
    EndTag tag;
    int line;
};

}  // namespace

RibbonGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;

    RibbonGraph g;
    std::map<std::string, int> edge_ids;
    std::map<std::string, int> edge_lines;
    std::map<std::string, int> vertex_ids;
    std::vector<std::vector<RawEnd>> raw_rotations;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "ribbon v1")
                throw ParseError("expected header 'ribbon v1', got '" + line + "'", lineno);
            header_seen = true;
            continue;
        }

        auto tokens = split_ws(line);
        if (tokens[0] == "edge") {
            if (tokens.size() != 3)
                throw ParseError("expected 'edge <name> <twist>'", lineno);
            const std::string& name = tokens[1];
            if (edge_ids.count(name))
                throw ParseError("duplicate edge '" + name + "'", lineno);
            bool twisted;
            if (tokens[2] == "0")
                twisted = false;
            else if (tokens[2] == "1")
                twisted = true;
            else
                throw ParseError("twist flag must be 0 or 1, got '" + tokens[2] + "'", lineno);
            edge_ids[name] = g.add_edge(name, twisted);
            edge_lines[name] = lineno;
        } else if (tokens[0] == "vertex") {
            if (tokens.size() < 2)
                throw ParseError("expected 'vertex <name>: <end> ...'", lineno);
            std::string name = tokens[1];
            std::size_t first_end = 2;
            if (!name.empty() && name.back() == ':') {
                name.pop_back();
            } else if (tokens.size() > 2 && tokens[2] == ":") {
                first_end = 3;
            } else {
                throw ParseError("missing ':' after vertex name", lineno);
            }
            if (name.empty()) throw ParseError("empty vertex name", lineno);
            if (vertex_ids.count(name))
                throw ParseError("duplicate vertex '" + name + "'", lineno);
            vertex_ids[name] = g.add_vertex(name);
            std::vector<RawEnd> rot;
            for (std::size_t i = first_end; i < tokens.size(); ++i) {
                const std::string& tok = tokens[i];
                auto dot = tok.rfind('.');
                if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size() ||
                    (tok.back() != 'a' && tok.back() != 'b'))
                    throw ParseError("malformed end '" + tok + "' (expected <edge>.a or <edge>.b)",
                                     lineno);
                rot.push_back(RawEnd{tok.substr(0, dot),
                                     tok.back() == 'a' ? EndTag::A : EndTag::B, lineno});
            }
            raw_rotations.push_back(std::move(rot));
        } else {
            throw ParseError("unknown directive '" + tokens[0] + "'", lineno);
        }
    }
    if (!header_seen) throw ParseError("empty input: missing 'ribbon v1' header");

    std::vector<int> uses(static_cast<std::size_t>(2 * g.edge_count()), 0);
    std::vector<int> use_line(static_cast<std::size_t>(2 * g.edge_count()), 0);
    for (std::size_t v = 0; v < raw_rotations.size(); ++v) {
        for (const RawEnd& re : raw_rotations[v]) {
            auto it = edge_ids.find(re.edge);
            if (it == edge_ids.end())
                throw ParseError("end '" + re.edge + (re.tag == EndTag::A ? ".a" : ".b") +
                                     "' references undeclared edge '" + re.edge + "'",
                                 re.line);
            EndRef er{it->second, re.tag};
            int id = end_id(er);
            if (++uses[static_cast<std::size_t>(id)] > 1)
                throw ParseError("end '" + re.edge + (re.tag == EndTag::A ? ".a" : ".b") +
                                     "' already placed at line " +
                                     std::to_string(use_line[static_cast<std::size_t>(id)]),
                                 re.line);
            use_line[static_cast<std::size_t>(id)] = re.line;
            g.vertices[v].rotation.push_back(er);
        }
    }
    for (const auto& [name, e] : edge_ids)
        for (int t = 0; t < 2; ++t)
            if (uses[static_cast<std::size_t>(2 * e + t)] == 0)
                throw ParseError("end '" + name + (t == 0 ? ".a" : ".b") +
                                     "' is never placed in a rotation",
                                 edge_lines[name]);

    validate(g);
    return g;
}

RibbonGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const RibbonGraph& g) {
    std::ostringstream os;
    os << "ribbon v1\n";
    for (const Edge& e : g.edges) os << "edge " << e.name << " " << (e.twisted ? 1 : 0) << "\n";
    for (const Vertex& v : g.vertices) {
        os << "vertex " << v.name << ":";
        for (const EndRef& er : v.rotation)
            os << " " << g.edges[static_cast<std::size_t>(er.edge)].name
               << (er.tag == EndTag::A ? ".a" : ".b");
        os << "\n";
    }
    return os.str();
}

}  // namespace brg

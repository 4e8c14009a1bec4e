#include "ctk/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace ctk {

namespace {

struct Line {
    int number;
    std::string text; // trimmed, comments stripped
};

std::vector<Line> read_lines(std::istream& in)
{
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = raw.find_last_not_of(" \t\r");
        out.push_back({no, raw.substr(first, last - first + 1)});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long to_long(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "bad integer '" + s + "'");
    }
}

} // namespace

ParsedSpec parse_spec(std::istream& in)
{
    auto lines = read_lines(in);

    std::optional<long> p, m;
    std::vector<Vertex> vertices;
    std::vector<EdgePair> edges;
    std::optional<Vertex> root;
    std::vector<std::pair<EdgePair, std::string>> omega_lines;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::pair<int, std::vector<int>>> z1_lines;

    // section order is fixed: field, diagram, omega, badpairs?, z1?
    static const std::vector<std::string> sections{"field:", "diagram:", "omega:", "badpairs:",
                                                   "z1:"};
    int section = -1;
    for (const auto& [no, text] : lines) {
        auto sec = std::find(sections.begin(), sections.end(), text);
        if (sec != sections.end()) {
            int idx = (int)(sec - sections.begin());
            if (idx <= section) fail(no, "section '" + text + "' out of order");
            section = idx;
            continue;
        }
        auto toks = tokens_of(text);
        switch (section) {
        case 0: // field
            if (toks.size() == 2 && toks[0] == "p") p = to_long(toks[1], no);
            else if (toks.size() == 2 && toks[0] == "m") m = to_long(toks[1], no);
            else fail(no, "unknown field entry '" + text + "' (expected 'p <prime>' or 'm <exp>')");
            break;
        case 1: // diagram
            if (!toks.empty() && toks[0] == "vertices") {
                if (toks.size() < 2) fail(no, "'vertices' needs at least one label");
                for (std::size_t i = 1; i < toks.size(); ++i)
                    vertices.push_back((Vertex)to_long(toks[i], no));
            } else if (toks.size() == 2 && toks[0] == "root") {
                root = (Vertex)to_long(toks[1], no);
            } else if (toks.size() == 3 && toks[0] == "edge") {
                edges.push_back(make_edge((Vertex)to_long(toks[1], no),
                                          (Vertex)to_long(toks[2], no)));
            } else {
                fail(no, "unknown diagram entry '" + text + "'");
            }
            break;
        case 2: // omega
            if (toks.size() == 5 && toks[0] == "edge" && toks[3] == "=") {
                omega_lines.push_back({make_edge((Vertex)to_long(toks[1], no),
                                                 (Vertex)to_long(toks[2], no)),
                                       toks[4]});
            } else {
                fail(no, "unknown omega entry '" + text + "' (expected 'edge i j = <twist>')");
            }
            break;
        case 3: // badpairs
            if (toks.size() >= 3 && toks[0] == "block") {
                std::vector<Vertex> blk;
                for (std::size_t i = 1; i < toks.size(); ++i)
                    blk.push_back((Vertex)to_long(toks[i], no));
                blocks.push_back(blk);
            } else {
                fail(no, "unknown badpairs entry '" + text + "' (expected 'block i j ...')");
            }
            break;
        case 4: // z1
            if (toks.size() >= 2 && toks[0] == "vec") {
                std::vector<int> v;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    long b = to_long(toks[i], no);
                    if (b != 0 && b != 1) fail(no, "z1 vectors are over {0,1}");
                    v.push_back((int)b);
                }
                z1_lines.push_back({no, v});
            } else {
                fail(no, "unknown z1 entry '" + text + "' (expected 'vec b1 b2 ...')");
            }
            break;
        default:
            fail(no, "content before the 'field:' section");
        }
    }

    if (!p || !m) throw ValidationError("field section must set both p and m");
    FieldSpec field(*p, (int)*m);
    if (vertices.empty()) throw ValidationError("diagram section must list vertices");

    Diagram d(vertices, edges);
    Vertex rt = root ? *root : *std::min_element(vertices.begin(), vertices.end());

    OmegaSpec om;
    for (const auto& [e, lit] : omega_lines) {
        if (om.count(e))
            throw ValidationError("duplicate omega assignment on edge {" +
                                  std::to_string(e.first) + "," + std::to_string(e.second) + "}");
        om[e] = parse_twist(lit, field);
    }

    std::vector<EdgePair> merge_pairs;
    for (const auto& blk : blocks)
        for (std::size_t i = 1; i < blk.size(); ++i)
            merge_pairs.push_back(make_edge(blk[0], blk[i]));
    Partition bp = Partition::singletons(vertices);
    try {
        bp = Partition::from_pairs(vertices, merge_pairs);
    } catch (const PreconditionError& e) {
        throw ValidationError(std::string("badpairs: ") + e.what());
    }

    ParsedSpec out{AmalgamSpec(d, field, om, bp, rt), ZVectorSpace::zero(d.size())};
    std::vector<std::vector<int>> z1_vecs;
    for (const auto& [no, v] : z1_lines) {
        if ((int)v.size() != d.size()) fail(no, "z1 vector has wrong length");
        z1_vecs.push_back(v);
    }
    out.z1 = ZVectorSpace::span_of(d.size(), z1_vecs);
    return out;
}

ParsedSpec load_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open spec file '" + path + "'");
    return parse_spec(in);
}

} // namespace ctk

#include "qalt/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qalt/errors.hpp"

namespace qalt {

namespace {

std::optional<std::pair<Int, Int>> two_bridge_from_name(const std::string& name) {
    if (name.rfind("2br_", 0) != 0) return std::nullopt;
    std::string rest = name.substr(4);
    auto us = rest.find('_');
    if (us == std::string::npos) return std::nullopt;
    try {
        Int p(rest.substr(0, us));
        Int q(rest.substr(us + 1));
        if (p < 1 || q < 1 || q >= p) return std::nullopt;
        return std::make_pair(p, q);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace

std::optional<CorpusEntry> parse_corpus_line(const std::string& line) {
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos) body = body.substr(0, hash);
    // trim
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    body.erase(body.begin(), std::find_if(body.begin(), body.end(), notspace));
    body.erase(std::find_if(body.rbegin(), body.rend(), notspace).base(), body.end());
    if (body.empty()) return std::nullopt;

    std::istringstream is(body);
    std::string name;
    is >> name;
    std::string rest;
    std::getline(is, rest);
    auto ns = std::find_if(rest.begin(), rest.end(), notspace);
    rest.erase(rest.begin(), ns);

    CorpusEntry e;
    e.name = name;
    e.two_bridge = two_bridge_from_name(name);
    if (rest.rfind("braid", 0) == 0) {
        std::string spec = rest.substr(5);
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw MalformedBraid("braid record needs `braid <k>: <word>` (" + name + ")");
        int strands = 0;
        try {
            strands = std::stoi(spec.substr(0, colon));
        } catch (...) {
            throw MalformedBraid("bad strand count in braid record " + name);
        }
        e.diagram = parse_braid(spec.substr(colon + 1), strands);
        e.from_braid = true;
    } else {
        e.diagram = parse_pd(rest);
    }
    return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameters("cannot open corpus file: " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto e = parse_corpus_line(line)) out.push_back(std::move(*e));
    }
    return out;
}

} // namespace qalt

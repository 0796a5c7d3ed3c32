#include "graphonlab/literals.hpp"

#include <charconv>

#include "graphonlab/json_io.hpp"

namespace graphonlab {

namespace {

int parse_int(const std::string& text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DomainError("expected an integer, got '" + text + "'");
    return v;
}

std::pair<std::string, std::string> split_once(const std::string& text, char sep) {
    std::size_t pos = text.find(sep);
    if (pos == std::string::npos) return {text, ""};
    return {text.substr(0, pos), text.substr(pos + 1)};
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw DomainError("empty graph spec");
    if (spec[0] == '@') {
        std::vector<Graph> graphs = read_graph6_file(spec.substr(1));
        if (graphs.empty()) throw DomainError("no graphs in " + spec.substr(1));
        return graphs.front();
    }
    if (spec.rfind("g6:", 0) == 0) return graph6_decode(spec.substr(3));
    char family = spec[0];
    std::string args = spec.substr(1);
    switch (family) {
        case 'K': {
            auto [a, b] = split_once(args, ',');
            if (b.empty()) return complete(parse_int(a));
            return complete_bipartite(parse_int(a), parse_int(b));
        }
        case 'C':
            return cycle(parse_int(args));
        case 'P':
            return path(parse_int(args));
        case 'E':
            return empty_graph(parse_int(args));
        default:
            throw DomainError("unknown graph spec '" + spec +
                              "' (use K/C/P/E<n>, Ka,b, g6:<string> or @file.g6)");
    }
}

StepGraphon parse_graphon_spec(const std::string& spec) {
    if (spec.empty()) throw DomainError("empty graphon spec");
    if (spec[0] == '@') return load_stepgraphon(spec.substr(1));
    auto [name, args] = split_once(spec, ':');
    if (name == "constant") return make_constant(Rational::parse(args).to_double());
    if (name == "turan") return make_turan(parse_int(args));
    if (name == "wrs") {
        auto [r, s] = split_once(args, ',');
        if (s.empty()) throw DomainError("wrs needs two parameters, e.g. wrs:2,0");
        return make_wrs(parse_int(r), parse_int(s));
    }
    if (name == "string_a") return make_string_a(Rational::parse(args));
    if (name == "from_graph") return make_from_graph(parse_graph_spec(args));
    throw DomainError("unknown graphon spec '" + spec +
                      "' (use constant:p, turan:r, wrs:r,s, string_a:a, from_graph:<g> or @file.json)");
}

HereditaryClass parse_class_spec(const std::string& spec) {
    auto [name, args] = split_once(spec, ':');
    if (name == "bipartite") return HereditaryClass::bipartite();
    if (name == "split") return HereditaryClass::split();
    if (name == "all") return HereditaryClass::all();
    if (name == "kt_free") return HereditaryClass::kt_free(parse_int(args));
    if (name == "crs") {
        auto [r, s] = split_once(args, ',');
        if (s.empty()) throw DomainError("crs needs two parameters, e.g. crs:3,1");
        return HereditaryClass::crs(parse_int(r), parse_int(s));
    }
    if (name == "forbidden") {
        if (args.empty() || args[0] != '@')
            throw DomainError("forbidden classes load their list from a file: forbidden:@file.g6");
        return HereditaryClass::forbidden(read_graph6_file(args.substr(1)), spec);
    }
    throw DomainError("unknown class spec '" + spec +
                      "' (use bipartite, split, all, kt_free:t, crs:r,s or forbidden:@file.g6)");
}

}  // namespace graphonlab

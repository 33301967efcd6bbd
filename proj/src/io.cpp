#include "pushgame/io.hpp"

#include <istream>
#include <sstream>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"

namespace pushgame {

namespace {

// Splits a line into tokens, dropping everything after '#'.
std::vector<std::string> tokenize(const std::string& line) {
    std::string visible = line.substr(0, line.find('#'));
    std::istringstream stream(visible);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

int parse_int(const std::string& token, int line_number) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw GameError(ErrorKind::ParseError,
                        "line " + std::to_string(line_number) + ": expected integer, got '" +
                            token + "'");
    }
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
    GraphFile file;
    RawGraph raw;
    bool saw_header = false;
    bool saw_vertices = false;

    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];

        if (!saw_header) {
            if (keyword != "simplex" || tokens.size() != 3 || tokens[1] != "n")
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) +
                                    ": file must start with 'simplex n <n>'");
            raw.n = parse_int(tokens[2], line_number);
            saw_header = true;
            continue;
        }
        if (!saw_vertices) {
            if (keyword != "vertices" || tokens.size() != 2)
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) +
                                    ": expected 'vertices <v>' after the header");
            raw.vertex_count = parse_int(tokens[1], line_number);
            saw_vertices = true;
            continue;
        }

        if (keyword == "region") {
            std::vector<int> region;
            for (std::size_t k = 1; k < tokens.size(); ++k)
                region.push_back(parse_int(tokens[k], line_number));
            raw.regions.push_back(std::move(region));
        } else if (keyword == "modulus") {
            if (tokens.size() != 2)
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) + ": expected 'modulus <m>'");
            if (file.modulus)
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) + ": modulus given twice");
            file.modulus = parse_int(tokens[1], line_number);
        } else if (keyword == "labeling") {
            if (tokens.size() < 2)
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) + ": labeling needs a name");
            std::string name = tokens[1];
            for (const auto& [existing, values] : file.labelings)
                if (existing == name)
                    throw GameError(ErrorKind::ParseError, "line " + std::to_string(line_number) +
                                                               ": labeling '" + name +
                                                               "' given twice");
            std::vector<int> values;
            for (std::size_t k = 2; k < tokens.size(); ++k)
                values.push_back(parse_int(tokens[k], line_number));
            if (static_cast<int>(values.size()) != raw.vertex_count)
                throw GameError(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) + ": labeling '" + name +
                                    "' has " + std::to_string(values.size()) + " values, expected " +
                                    std::to_string(raw.vertex_count));
            file.labelings.emplace_back(std::move(name), std::move(values));
        } else {
            throw GameError(ErrorKind::ParseError, "line " + std::to_string(line_number) +
                                                       ": unknown keyword '" + keyword + "'");
        }
    }
    if (!saw_header) throw GameError(ErrorKind::ParseError, "empty input");

    file.graph = validate_graph(raw);
    return file;
}

GraphFile parse_graph_text(const std::string& text) {
    std::istringstream stream(text);
    return parse_graph_file(stream);
}

std::string serialize_graph(const SimplexGraph& g) {
    std::ostringstream out;
    out << "simplex n " << g.n << "\n";
    out << "vertices " << g.vertex_count << "\n";
    for (const auto& region : g.regions) {
        out << "region";
        for (int v : region) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

Labeling resolve_labeling(const GraphFile& file, const std::string& name, int modulus) {
    if (modulus < 2) throw GameError(ErrorKind::DomainError, "modulus must be >= 2");
    for (const auto& [existing, values] : file.labelings) {
        if (existing != name) continue;
        for (int value : values)
            if (value < 0 || value >= modulus)
                throw GameError(ErrorKind::DomainError,
                                "labeling '" + name + "' has value " + std::to_string(value) +
                                    " outside [0, " + std::to_string(modulus) + ")");
        return Labeling{modulus, values};
    }
    throw GameError(ErrorKind::DomainError, "no labeling named '" + name + "'");
}

}  // namespace pushgame

#include "cwc/code_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cwc {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    return out;
}

long parse_long(const std::string& token, const char* what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw ValidationError(std::string("malformed ") + what + ": '" + token + "'");
    }
    if (used != token.size())
        throw ValidationError(std::string("malformed ") + what + ": '" + token + "'");
    return value;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token)
        tokens.push_back(token);
    return tokens;
}

}  // namespace

void write_code(std::ostream& out, const Code& c) {
    out << c.params.n << ' ' << c.params.d << ' ' << c.params.w << ' ' << c.params.q << '\n';
    auto words = c.words;
    std::sort(words.begin(), words.end());
    for (const auto& u : words) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i)
                out << ' ';
            out << static_cast<int>(u[i]);
        }
        out << '\n';
    }
}

void write_code_file(const std::string& path, const Code& c) {
    auto out = open_output(path);
    write_code(out, c);
}

Code read_code(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("code file: missing header line");
    auto header = split_tokens(line);
    if (header.size() != 4)
        throw ValidationError("code file: header must be 'n d w q'");
    Code c;
    c.params.n = static_cast<int>(parse_long(header[0], "n"));
    c.params.d = static_cast<int>(parse_long(header[1], "d"));
    c.params.w = static_cast<int>(parse_long(header[2], "w"));
    c.params.q = static_cast<int>(parse_long(header[3], "q"));
    if (c.params.n <= 0)
        throw ValidationError("code file: n must be positive");
    if (c.params.q < 2 || c.params.q > kMaxAlphabet)
        throw ValidationError("code file: q must be in [2, 256]");

    while (std::getline(in, line)) {
        auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        if (tokens.size() != static_cast<std::size_t>(c.params.n))
            throw ValidationError("code file: word with wrong number of symbols");
        Word u;
        u.reserve(tokens.size());
        for (const auto& token : tokens) {
            long s = parse_long(token, "symbol");
            if (s < 0 || s > 255)
                throw ValidationError("code file: symbol outside [0, 255]");
            u.push_back(static_cast<std::uint8_t>(s));
        }
        c.words.push_back(std::move(u));
    }
    return c;
}

Code read_code_file(const std::string& path) {
    auto in = open_input(path);
    return read_code(in);
}

void write_design(std::ostream& out, const SetSystem& s) {
    out << s.point_count << ' ' << s.blocks.size() << '\n';
    if (!s.groups.empty()) {
        out << "groups:";
        for (std::size_t g = 0; g < s.groups.size(); ++g) {
            out << (g ? ";" : " ");
            for (std::size_t i = 0; i < s.groups[g].size(); ++i) {
                if (i)
                    out << ',';
                out << s.groups[g][i];
            }
        }
        out << '\n';
    }
    auto blocks = s.blocks;
    std::sort(blocks.begin(), blocks.end());
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out << ' ';
            out << block[i];
        }
        out << '\n';
    }
}

void write_design_file(const std::string& path, const SetSystem& s) {
    auto out = open_output(path);
    write_design(out, s);
}

SetSystem read_design(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("design file: missing header line");
    auto header = split_tokens(line);
    if (header.size() != 2)
        throw ValidationError("design file: header must be 'n b'");
    SetSystem s;
    s.point_count = static_cast<int>(parse_long(header[0], "n"));
    auto block_count = parse_long(header[1], "block count");
    if (s.point_count <= 0 || block_count < 0)
        throw ValidationError("design file: bad header values");

    bool first_body_line = true;
    while (std::getline(in, line)) {
        if (first_body_line && line.rfind("groups:", 0) == 0) {
            first_body_line = false;
            std::string rest = line.substr(7);
            std::istringstream groups_in(rest);
            std::string group_text;
            while (std::getline(groups_in, group_text, ';')) {
                std::vector<int> group;
                std::istringstream group_in(group_text);
                std::string point_text;
                while (std::getline(group_in, point_text, ',')) {
                    auto tokens = split_tokens(point_text);
                    if (tokens.size() != 1)
                        throw ValidationError("design file: malformed groups line");
                    group.push_back(static_cast<int>(parse_long(tokens[0], "group point")));
                }
                if (!group.empty())
                    s.groups.push_back(std::move(group));
            }
            continue;
        }
        first_body_line = false;
        auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        std::vector<int> block;
        block.reserve(tokens.size());
        for (const auto& token : tokens)
            block.push_back(static_cast<int>(parse_long(token, "point")));
        s.blocks.push_back(std::move(block));
    }
    if (s.blocks.size() != static_cast<std::size_t>(block_count))
        throw ValidationError("design file: block count does not match header");
    canonicalize(s);
    return s;
}

SetSystem read_design_file(const std::string& path) {
    auto in = open_input(path);
    return read_design(in);
}

}  // namespace cwc

#include "polydiag/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace polydiag {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return in;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

Rational parse_entry(const std::string& token, std::size_t line_no) {
    try {
        auto slash = token.find('/');
        if (slash == std::string::npos) return parse_int(token);
        Int den = parse_int(std::string_view(token).substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + token + "'");
        return {parse_int(std::string_view(token).substr(0, slash)), den};
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(at_line(line_no) + e.what());
    }
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        std::vector<Rational> row;
        for (const auto& t : toks) row.push_back(parse_entry(t, line_no));
        if (!rows.empty() && row.size() != rows.front().size())
            throw InvalidArgument(at_line(line_no) + "ragged row with " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidArgument("matrix file has no rows");
    if (rows.size() != rows.front().size())
        throw InvalidArgument("matrix is not square: " + std::to_string(rows.size()) + " rows of " +
                              std::to_string(rows.front().size()) + " entries");

    Int scale = 1;
    for (const auto& row : rows)
        for (const auto& x : row) scale = lcm(scale, x.den());
    IntegerMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = checked_mul(rows[i][j].num(), scale / rows[i][j].den());
    return {std::move(m), scale};
}

ParsedMatrix parse_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return parse_matrix(in);
}

ParsedGraph parse_graph(std::istream& in, GraphMatrixKind kind) {
    std::size_t declared = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> warnings;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t line_no = 0;
    std::size_t largest = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks.size() != 2) throw InvalidArgument(at_line(line_no) + "expected two tokens");
        if (toks[0] == "n") {
            Int count = parse_int(toks[1]);
            if (count < 1) throw InvalidArgument(at_line(line_no) + "vertex count must be positive");
            declared = static_cast<std::size_t>(count);
            continue;
        }
        Int u = parse_int(toks[0]);
        Int v = parse_int(toks[1]);
        if (u < 1 || v < 1) throw InvalidArgument(at_line(line_no) + "vertex indices are 1-based");
        if (u == v) throw InvalidArgument(at_line(line_no) + "self-loop at vertex " + to_string(u));
        auto a = static_cast<std::size_t>(std::min(u, v));
        auto b = static_cast<std::size_t>(std::max(u, v));
        if (!seen.insert({a, b}).second) {
            warnings.push_back(at_line(line_no) + "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
            continue;
        }
        largest = std::max(largest, b);
        edges.emplace_back(a - 1, b - 1);
    }
    std::size_t n = declared ? declared : largest;
    if (n == 0) throw InvalidArgument("graph has no vertices");
    if (largest > n)
        throw InvalidArgument("vertex " + std::to_string(largest) + " out of range for n = " + std::to_string(n));

    IntegerMatrix m(n);
    for (auto [a, b] : edges) {
        Int weight = kind == GraphMatrixKind::adjacency ? 1 : -1;
        m(a, b) = weight;
        m(b, a) = weight;
        if (kind == GraphMatrixKind::laplacian) {
            m(a, a) += 1;
            m(b, b) += 1;
        }
    }
    return {std::move(m), std::move(warnings)};
}

ParsedGraph parse_graph_file(const std::string& path, GraphMatrixKind kind) {
    auto in = open_input(path);
    return parse_graph(in, kind);
}

std::vector<SignedSymmetry> parse_generators(std::istream& in, std::size_t n) {
    std::vector<SignedSymmetry> out;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        SignedSymmetry g;
        std::size_t first = 0;
        if (toks[0] == "-") {
            g.sign = -1;
            first = 1;
        }
        if (toks.size() - first != n)
            throw InvalidArgument(at_line(line_no) + "expected " + std::to_string(n) + " images, got " +
                                  std::to_string(toks.size() - first));
        for (std::size_t k = first; k < toks.size(); ++k) {
            Int image = parse_int(toks[k]);
            if (image < 1 || image > static_cast<Int>(n)) throw InvalidArgument(at_line(line_no) + "image out of range");
            g.perm.push_back(static_cast<int>(image - 1));
        }
        try {
            g.validate();
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(at_line(line_no) + e.what());
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<SignedSymmetry> parse_generators_file(const std::string& path, std::size_t n) {
    auto in = open_input(path);
    return parse_generators(in, n);
}

ColoringVector parse_coloring(const std::string& text) {
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char ch) { return ch == ',' || ch == '(' || ch == ')'; }, ' ');
    std::vector<int> entries;
    for (const auto& tok : tokens_of(cleaned)) {
        Int v = parse_int(tok);
        if (v < -1'000'000 || v > 1'000'000) throw InvalidArgument("coloring entry out of range: " + tok);
        entries.push_back(static_cast<int>(v));
    }
    if (entries.empty()) throw InvalidArgument("empty coloring vector");
    return ColoringVector(std::move(entries));
}

}  // namespace polydiag

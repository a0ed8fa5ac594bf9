#include "latcol/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "latcol/errors.hpp"

namespace latcol {

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, bool commas) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_sep = [&](char c) { return c == ' ' || c == '\t' || c == '\r' || (commas && c == ','); };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !is_sep(line[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, std::size_t column, const std::string& what) {
    std::string msg(source);
    msg += ':' + std::to_string(line);
    if (column > 0) {
        msg += ':' + std::to_string(column);
    }
    throw InputError(msg + ": " + what);
}

Scalar scalar_at(const Token& tok, std::string_view source, std::size_t line) {
    try {
        return Scalar::parse(tok.text);
    } catch (const std::invalid_argument& e) {
        fail(source, line, tok.column, "bad scalar '" + std::string(tok.text) + "': " + e.what());
    }
}

std::size_t size_at(const Token& tok, std::string_view source, std::size_t line) {
    std::size_t value = 0;
    if (tok.text.empty() || tok.text.size() > 6) {
        fail(source, line, tok.column, "expected a dimension, got '" + std::string(tok.text) + "'");
    }
    for (char c : tok.text) {
        if (c < '0' || c > '9') {
            fail(source, line, tok.column, "expected a dimension, got '" + std::string(tok.text) + "'");
        }
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

std::string_view trim_left(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
    }
    return s.substr(i);
}

// Lines with their 1-based numbers, skipping blanks and '#' comments.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        std::string_view body = trim_left(line);
        if (!body.empty() && body.front() != '#') {
            out.emplace_back(number, line);
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

std::vector<Scalar> scalars_of(const std::vector<Token>& toks, std::string_view source, std::size_t line) {
    std::vector<Scalar> out;
    out.reserve(toks.size());
    for (const Token& t : toks) {
        out.push_back(scalar_at(t, source, line));
    }
    return out;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text, std::string_view source) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        fail(source, 1, 0, "empty file, expected 'rows cols'");
    }
    auto header = tokenize(lines[0].second, false);
    if (header.size() != 2) {
        fail(source, lines[0].first, header.empty() ? 1 : header.front().column,
             "expected 'rows cols' header with two integers");
    }
    const std::size_t rows = size_at(header[0], source, lines[0].first);
    const std::size_t cols = size_at(header[1], source, lines[0].first);
    if (rows == 0 || cols == 0) {
        fail(source, lines[0].first, header[0].column, "dimensions must be positive");
    }

    MatrixFile out{Matrix(rows, cols), std::nullopt};
    std::size_t next = 1;
    for (std::size_t r = 0; r < rows; ++r, ++next) {
        if (next >= lines.size()) {
            std::size_t last = lines.back().first;
            fail(source, last + 1, 0,
                 "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        }
        auto [number, line] = lines[next];
        if (trim_left(line).starts_with("spectrum:")) {
            fail(source, number, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        }
        auto toks = tokenize(line, false);
        if (toks.size() != cols) {
            std::size_t col = toks.size() > cols ? toks[cols].column : line.size() + 1;
            fail(source, number, col,
                 "expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            out.matrix(r, c) = scalar_at(toks[c], source, number);
        }
    }

    if (next < lines.size()) {
        auto [number, line] = lines[next];
        std::string_view body = trim_left(line);
        std::size_t indent = line.size() - body.size();
        if (!body.starts_with("spectrum:")) {
            fail(source, number, indent + 1, "unexpected content after the matrix rows");
        }
        std::string_view rest = body.substr(9);
        auto toks = tokenize(rest, true);
        if (toks.empty()) {
            fail(source, number, indent + 10, "empty spectrum");
        }
        for (Token& t : toks) {
            t.column += indent + 9;
        }
        out.spectrum = scalars_of(toks, source, number);
        ++next;
    }
    if (next < lines.size()) {
        fail(source, lines[next].first, 1, "unexpected content after the spectrum line");
    }
    return out;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_file(buffer.str(), path);
}

std::string format_matrix_file(const Matrix& m, const std::optional<std::vector<Scalar>>& spectrum) {
    std::string out = std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += m(r, c).to_string();
        }
        out += '\n';
    }
    if (spectrum) {
        out += "spectrum:";
        for (const Scalar& s : *spectrum) {
            out += ' ' + s.to_string();
        }
        out += '\n';
    }
    return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text, std::string_view source) {
    auto toks = tokenize(text, true);
    if (toks.empty()) {
        fail(source, 1, 1, "expected at least one scalar");
    }
    return scalars_of(toks, source, 1);
}

std::string format_subspace(const Subspace& s) {
    std::string out = std::to_string(s.ambient()) + ' ' + std::to_string(s.dim()) + '\n';
    for (std::size_t r = 0; r < s.ambient(); ++r) {
        for (std::size_t c = 0; c < s.dim(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += s.basis()(r, c).to_string();
        }
        out += '\n';
    }
    return out;
}

Subspace parse_subspace(std::string_view text, std::string_view source) {
    // A matrix file whose columns span the subspace; zero columns are allowed.
    auto lines = content_lines(text);
    if (!lines.empty()) {
        auto header = tokenize(lines[0].second, false);
        if (header.size() == 2 && header[1].text == "0") {
            std::size_t ambient = size_at(header[0], source, lines[0].first);
            return Subspace(ambient);
        }
    }
    return Subspace::column_space(parse_matrix_file(text, source).matrix);
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Report::Report(std::string command) { fields_.emplace_back("command", std::move(command)); }

void Report::add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }

void Report::add_inputs(std::string_view canonical_inputs) { add("input_digest", fnv1a_hex(canonical_inputs)); }

void Report::set_timing(std::chrono::steady_clock::duration elapsed) {
    timing_ms_ = std::chrono::duration<double, std::milli>(elapsed).count();
}

void Report::write(std::ostream& out) const { out << str(); }

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        out += k + ": " + v + '\n';
    }
    if (timing_ms_) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *timing_ms_);
        out += std::string("timing_ms: ") + buf + '\n';
    }
    return out;
}

}  // namespace latcol

#include "sylv/io.hpp"

#include "sylv/error.hpp"
#include "sylv/rational.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace sylv {

namespace {

struct Token {
    std::string text;
    std::size_t line = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back({cur, line});
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            ++line;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return tokens;
}

[[noreturn]] void parse_fail(const std::string& label, std::size_t line, const std::string& msg) {
    throw Error(Errc::parse, label + " line " + std::to_string(line) + ": " + msg);
}

enum class NumberClass { integer, decimal, fraction };

NumberClass classify(const std::string& t) {
    if (t.find('/') != std::string::npos) return NumberClass::fraction;
    if (t.find_first_of(".eE") != std::string::npos) return NumberClass::decimal;
    return NumberClass::integer;
}

bool integer_digits(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

double parse_double_token(const Token& t, const std::string& label) {
    double v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        parse_fail(label, t.line, "unparsable entry '" + t.text + "'");
    return v;
}

Scalar materialize(const Token& t, Backend backend, const std::string& label) {
    switch (classify(t.text)) {
        case NumberClass::fraction:
            if (backend == Backend::float64)
                parse_fail(label, t.line,
                           "fractional entry '" + t.text + "' requires the exact backend");
            try {
                return Scalar(Rational::parse(t.text));
            } catch (const Error&) {
                parse_fail(label, t.line, "unparsable entry '" + t.text + "'");
            }
        case NumberClass::decimal:
            if (backend == Backend::exact)
                parse_fail(label, t.line,
                           "decimal entry '" + t.text + "' requires the float64 backend");
            return Scalar(parse_double_token(t, label));
        case NumberClass::integer:
        default:
            if (!integer_digits(t.text))
                parse_fail(label, t.line, "unparsable entry '" + t.text + "'");
            if (backend == Backend::exact) return Scalar(Rational::parse(t.text));
            return Scalar(parse_double_token(t, label));
    }
}

std::size_t parse_dim(const Token& t, const std::string& label) {
    std::size_t v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || v == 0)
        parse_fail(label, t.line, "invalid dimension '" + t.text + "'");
    return v;
}

Matrix parse_matrix_tokens(const std::vector<Token>& tokens, Backend backend,
                           const std::string& label) {
    if (tokens.size() < 2) throw Error(Errc::parse, label + " line 1: missing 'rows cols' header");
    std::size_t rows = parse_dim(tokens[0], label);
    std::size_t cols = parse_dim(tokens[1], label);
    if (rows > (1u << 20) || cols > (1u << 20))
        parse_fail(label, tokens[0].line, "dimensions too large");
    std::size_t want = rows * cols;
    if (tokens.size() != want + 2)
        parse_fail(label, tokens.back().line,
                   "expected " + std::to_string(want) + " entries, found " +
                       std::to_string(tokens.size() - 2));
    Matrix m(rows, cols, backend);
    for (std::size_t i = 0; i < want; ++i)
        m(i / cols, i % cols) = materialize(tokens[i + 2], backend, label);
    return m;
}

std::vector<Scalar> parse_vector_tokens(const std::vector<Token>& tokens, Backend backend,
                                        const std::string& label) {
    if (tokens.empty()) throw Error(Errc::parse, label + " line 1: missing length header");
    std::size_t n = parse_dim(tokens[0], label);
    if (tokens.size() != n + 1)
        parse_fail(label, tokens.back().line,
                   "expected " + std::to_string(n) + " entries, found " +
                       std::to_string(tokens.size() - 1));
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(materialize(tokens[i + 1], backend, label));
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Matrix parse_matrix_file(const std::string& path, Backend backend) {
    return parse_matrix_tokens(tokenize(read_file(path)), backend, path);
}

std::vector<Scalar> parse_vector_file(const std::string& path, Backend backend) {
    return parse_vector_tokens(tokenize(read_file(path)), backend, path);
}

Matrix parse_matrix_text(const std::string& text, Backend backend) {
    return parse_matrix_tokens(tokenize(text), backend, "<input>");
}

std::vector<Scalar> parse_vector_text(const std::string& text, Backend backend) {
    return parse_vector_tokens(tokenize(text), backend, "<input>");
}

Backend resolve_backend(const std::vector<std::string>& paths, Backend fallback) {
    bool saw_fraction = false, saw_decimal = false;
    std::string fraction_at, decimal_at;
    for (const auto& path : paths) {
        for (const Token& t : tokenize(read_file(path))) {
            switch (classify(t.text)) {
                case NumberClass::fraction:
                    saw_fraction = true;
                    fraction_at = path + " line " + std::to_string(t.line);
                    break;
                case NumberClass::decimal:
                    saw_decimal = true;
                    decimal_at = path + " line " + std::to_string(t.line);
                    break;
                default:
                    break;
            }
        }
    }
    if (saw_fraction && saw_decimal)
        throw Error(Errc::parse, "fractions (" + fraction_at + ") and decimals (" + decimal_at +
                                     ") cannot mix in one run");
    if (saw_fraction) return Backend::exact;
    if (saw_decimal) return Backend::float64;
    return fallback;
}

std::string format_matrix(const Matrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += m(r, c).to_string();
        }
        out += '\n';
    }
    return out;
}

std::string format_vector(const std::vector<Scalar>& v) {
    std::string out = std::to_string(v.size()) + "\n";
    for (const Scalar& s : v) {
        out += s.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace sylv

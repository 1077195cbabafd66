#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tnla/bd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"

namespace tnla {

/// Text formats:
///   matrix  "M <rows> <cols>"  then one whitespace-separated row per line
///   BD grid "BD <rows> <cols>" same layout
///   vector  "V <len>"          then one value per line
/// '#' starts a comment. Values are written with 17 significant digits
/// (which round-trips binary64 exactly) or, in hex mode, as hexadecimal
/// floats; the reader accepts both forms.

namespace detail {

struct Token {
    std::string text;
    long line;
    long column;
};

class Tokenizer {
public:
    explicit Tokenizer(std::istream& in) : in_(in) {}

    bool next(Token& tok) {
        while (true) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) return false;
                ++lineno_;
                pos_ = 0;
                continue;
            }
            const char c = line_[pos_];
            if (c == '#') {
                pos_ = line_.size();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
                ++pos_;
                continue;
            }
            const std::size_t start = pos_;
            while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' &&
                   line_[pos_] != '\r' && line_[pos_] != ',' && line_[pos_] != '#')
                ++pos_;
            tok = {line_.substr(start, pos_ - start), lineno_, static_cast<long>(start) + 1};
            return true;
        }
    }

    long line() const { return lineno_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
    long lineno_ = 0;
};

inline Token expect(Tokenizer& tz, const char* what) {
    Token t;
    if (!tz.next(t)) throw ParseError(std::string("unexpected end of input, wanted ") + what,
                                      tz.line(), 1);
    return t;
}

inline std::size_t parse_count(const Token& t) {
    char* end = nullptr;
    const long v = std::strtol(t.text.c_str(), &end, 10);
    if (end == t.text.c_str() || *end != '\0' || v < 0 || v > 100000000L)
        throw ParseError("bad dimension '" + t.text + "'", t.line, t.column);
    return static_cast<std::size_t>(v);
}

inline double parse_value(const Token& t) {
    char* end = nullptr;
    const double v = std::strtod(t.text.c_str(), &end);
    if (end == t.text.c_str() || *end != '\0' || !std::isfinite(v))
        throw ParseError("bad number '" + t.text + "'", t.line, t.column);
    return v;
}

inline void write_value(std::ostream& out, double v, bool hex) {
    char buf[48];
    std::snprintf(buf, sizeof buf, hex ? "%a" : "%.17g", v);
    out << buf;
}

inline Matrix<double> read_grid(std::istream& in, const char* tag) {
    Tokenizer tz(in);
    Token t = expect(tz, tag);
    if (t.text != tag)
        throw ParseError(std::string("expected '") + tag + "', got '" + t.text + "'",
                         t.line, t.column);
    const std::size_t rows = parse_count(expect(tz, "row count"));
    const std::size_t cols = parse_count(expect(tz, "column count"));
    if (rows == 0 || cols == 0) throw ParseError("empty dimensions", t.line, t.column);
    Matrix<double> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_value(expect(tz, "matrix entry"));
    Token extra;
    if (tz.next(extra))
        throw ParseError("trailing content '" + extra.text + "'", extra.line, extra.column);
    return m;
}

inline void write_grid(std::ostream& out, const Matrix<double>& m, const char* tag,
                       bool hex) {
    out << tag << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            write_value(out, m(i, j), hex);
        }
        out << '\n';
    }
}

}  // namespace detail

inline DenseMatrix read_dense(std::istream& in) { return detail::read_grid(in, "M"); }

inline BdMatrix read_bd(std::istream& in) {
    return BdMatrix(detail::read_grid(in, "BD"));
}

inline Vector read_vector(std::istream& in) {
    detail::Tokenizer tz(in);
    detail::Token t = detail::expect(tz, "V");
    if (t.text != "V")
        throw ParseError("expected 'V', got '" + t.text + "'", t.line, t.column);
    const std::size_t len = detail::parse_count(detail::expect(tz, "length"));
    Vector v(len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = detail::parse_value(detail::expect(tz, "vector entry"));
    detail::Token extra;
    if (tz.next(extra))
        throw ParseError("trailing content '" + extra.text + "'", extra.line, extra.column);
    return v;
}

inline void write_dense(std::ostream& out, const DenseMatrix& m, bool hex = false) {
    detail::write_grid(out, m, "M", hex);
}

inline void write_bd(std::ostream& out, const BdMatrix& b, bool hex = false) {
    detail::write_grid(out, b.grid(), "BD", hex);
}

inline void write_vector(std::ostream& out, const Vector& v, bool hex = false) {
    out << "V " << v.size() << '\n';
    for (double x : v) {
        detail::write_value(out, x, hex);
        out << '\n';
    }
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace tnla

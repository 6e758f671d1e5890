#include "cnb/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cnb/errors.hpp"

namespace cnb {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses one real number at the front of s, advancing s past it.
// Returns false if s does not start with a number. Accepts a leading '+'
// (from_chars only knows '-') but rejects doubled signs.
bool take_real(std::string_view& s, double& out) {
    std::string_view t = s;
    bool plus = false;
    if (!t.empty() && t.front() == '+') {
        t.remove_prefix(1);
        plus = true;
    }
    if (plus && !t.empty() && (t.front() == '+' || t.front() == '-')) return false;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    t.remove_prefix(static_cast<std::size_t>(ptr - begin));
    s = t;
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw ParseError("invalid complex literal '" + std::string(text) + "'");
}

} // namespace

Cplx parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    const std::string_view original = text;
    if (s.empty()) bad_literal(original);

    // Leading imaginary-only forms with implicit coefficient: i, +i, -i.
    double sign = 1.0;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        sign = body.front() == '-' ? -1.0 : 1.0;
        body.remove_prefix(1);
    }
    if (body == "i") return Cplx(0.0, sign);

    double first = 0.0;
    if (!take_real(s, first)) bad_literal(original);
    if (!std::isfinite(first)) bad_literal(original);

    if (s.empty()) return Cplx(first, 0.0); // plain real
    if (s == "i") return Cplx(0.0, first);  // pure imaginary

    // Remaining: [ws] sign [ws] (number)? i
    std::string_view rest = trim(s);
    if (rest.empty() || (rest.front() != '+' && rest.front() != '-')) bad_literal(original);
    const double imag_sign = rest.front() == '-' ? -1.0 : 1.0;
    rest.remove_prefix(1);
    rest = trim(rest);
    if (rest == "i") return Cplx(first, imag_sign);
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) bad_literal(original);
    double second = 0.0;
    if (!take_real(rest, second)) bad_literal(original);
    if (!std::isfinite(second)) bad_literal(original);
    if (rest != "i") bad_literal(original);
    return Cplx(first, imag_sign * second);
}

std::string format_double(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

std::string format_complex(Cplx z, int precision) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return format_double(re, precision);
    if (re == 0.0) return format_double(im, precision) + "i";
    if (im < 0.0) return format_double(re, precision) + "-" + format_double(-im, precision) + "i";
    return format_double(re, precision) + "+" + format_double(im, precision) + "i";
}

std::string format_complex(Cplx z) { return format_complex(z, 17); }

ComplexMatrix read_matrix(std::istream& in) {
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("matrix header must be two integers");
    if (rows <= 0 || cols <= 0) {
        throw ParseError("matrix dimensions must be positive, got " + std::to_string(rows) +
                         " " + std::to_string(cols));
    }
    if (rows > 100000 || cols > 100000) {
        throw ParseError("matrix dimensions implausibly large: " + std::to_string(rows) + " " +
                         std::to_string(cols));
    }
    std::vector<Cplx> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    std::string token;
    for (long long i = 0; i < rows * cols; ++i) {
        if (!(in >> token)) {
            throw ParseError("matrix body ended early: expected " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(i));
        }
        entries.push_back(parse_complex(token));
    }
    if (in >> token) throw ParseError("trailing content after matrix body: '" + token + "'");
    try {
        return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                             std::move(entries));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << " ";
            out << format_complex(m(i, j));
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_matrix(out, m);
    if (!out) throw ParseError("write to '" + path + "' failed");
}

std::string matrix_to_string(const ComplexMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

ComplexMatrix matrix_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

} // namespace cnb

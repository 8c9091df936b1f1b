#include "qpt/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return false;
    }
    return true;
}

/* Returns the next content line, tracking the 1-based line number. */
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!is_blank_or_comment(line))
            return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!next_content_line(in, line, lineno))
        throw ParseError("empty input, expected a 'dim <d>' header");
    std::istringstream header(line);
    std::string tag;
    long long dim_signed = 0;
    if (!(header >> tag) || tag != "dim" || !(header >> dim_signed))
        fail(lineno, "expected 'dim <d>' header");
    std::string trailing;
    if (header >> trailing)
        fail(lineno, "unexpected text after the dimension");
    if (dim_signed <= 0)
        fail(lineno, "dimension must be positive");
    const std::size_t d = static_cast<std::size_t>(dim_signed);

    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!next_content_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(d) + " rows, found " +
                             std::to_string(r));
        std::istringstream row(line);
        for (std::size_t c = 0; c < d; ++c) {
            double re = 0.0, im = 0.0;
            if (!(row >> re))
                fail(lineno, "entry " + std::to_string(c + 1) + ": expected a real part");
            if (!(row >> im))
                fail(lineno, "entry " + std::to_string(c + 1) + ": expected an imaginary part");
            if (!std::isfinite(re) || !std::isfinite(im))
                fail(lineno, "entry " + std::to_string(c + 1) + ": non-finite value");
            m(r, c) = cplx{re, im};
        }
        double extra = 0.0;
        if (row >> extra)
            fail(lineno, "row has more than " + std::to_string(2 * d) + " values");
        if (!row.eof()) {
            row.clear();
            std::string junk;
            row >> junk;
            if (!junk.empty())
                fail(lineno, "unexpected token '" + junk + "'");
        }
    }
    if (next_content_line(in, line, lineno))
        fail(lineno, "more rows than the declared dimension");
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    out << "dim " << d << "\n";
    char buf[64];
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const cplx z = a(r, c);
            std::snprintf(buf, sizeof buf, "%.17g %.17g", z.real(), z.imag());
            out << (c == 0 ? "" : "  ") << buf;
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& a) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path + " for writing");
    write_matrix(out, a);
    if (!out.flush())
        throw ParseError("failed writing " + path);
}

}  // namespace qpt

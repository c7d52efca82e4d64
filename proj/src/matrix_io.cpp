#include "idealcalc/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealcalc/errors.hpp"

namespace idealcalc {

namespace {

// Stream of whitespace-separated tokens with '#' comments stripped.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& token) {
        while (true) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) return false;
                const std::size_t hash = line_.find('#');
                if (hash != std::string::npos) line_.resize(hash);
                pos_ = 0;
                continue;
            }
            while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            if (pos_ >= line_.size()) continue;
            const std::size_t start = pos_;
            while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            token = line_.substr(start, pos_ - start);
            return true;
        }
    }

private:
    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
};

double to_double(const std::string& token) {
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ConfigError("matrix file: malformed number '" + token + "'");
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Matrix read_matrix(std::istream& in) {
    TokenReader reader(in);
    std::string token;
    if (!reader.next(token)) throw ConfigError("matrix file: missing size header");
    int n = 0;
    {
        auto res = std::from_chars(token.data(), token.data() + token.size(), n);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size() || n < 1)
            throw ConfigError("matrix file: malformed size '" + token + "'");
    }
    Matrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!reader.next(token))
                throw ConfigError("matrix file: truncated at row " + std::to_string(i));
            const double re = to_double(token);
            if (!reader.next(token))
                throw ConfigError("matrix file: truncated at row " + std::to_string(i));
            const double im = to_double(token);
            x(i, j) = Complex(re, im);
        }
    if (reader.next(token))
        throw ConfigError("matrix file: trailing content '" + token + "'");
    return x;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("matrix file: cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("write_matrix: only square matrices are stored");
    out << x.rows() << "\n";
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_double(x(i, j).real()) << ' ' << format_double(x(i, j).imag());
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const Matrix& x) {
    std::ofstream out(path);
    if (!out) throw ConfigError("matrix file: cannot open '" + path + "' for writing");
    write_matrix(out, x);
}

}  // namespace idealcalc

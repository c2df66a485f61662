#include "coqla/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace coqla {

namespace {

constexpr long kMaxExponent = 4096;

bool isUnit(char c) { return c == 'i' || c == 'j' || c == 'k'; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Decimal literal split into its digit string (dot removed) and a power of 10.
struct Decimal {
    std::string text;      // as written, for strtod
    std::string digits;    // mantissa digits without the dot
    long exponent = 0;     // value = digits * 10^exponent
};

template <Scalar T>
T decimalValue(const Decimal& d) {
    if constexpr (isExact<T>()) {
        mpz_class mant(d.digits, 10);
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(d.exponent < 0 ? -d.exponent : d.exponent));
        Rational v = d.exponent < 0 ? Rational(mant, pow10) : Rational(mant * pow10);
        v.canonicalize();
        return v;
    } else {
        return std::strtod(d.text.c_str(), nullptr);
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool atEnd() const { return pos_ >= s_.size(); }
    char peek() const { return atEnd() ? '\0' : s_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        std::string token = "<end>";
        if (at < s_.size()) {
            std::size_t end = at + 1;
            while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) &&
                   s_[end] != '+' && s_[end] != '-' && s_[end] != ';')
                ++end;
            token = std::string(s_.substr(at, end - at));
        }
        throw ParseError(message, base_ + at, token);
    }

    Decimal readDecimal() {
        Decimal d;
        const std::size_t start = pos_;
        std::size_t fracDigits = 0;
        bool sawDot = false;
        while (!atEnd() && (isDigit(peek()) || (peek() == '.' && !sawDot))) {
            if (peek() == '.') {
                sawDot = true;
            } else {
                d.digits.push_back(peek());
                if (sawDot) ++fracDigits;
            }
            advance();
        }
        if (d.digits.empty()) fail("expected digits", start);
        long exp = 0;
        if (peek() == 'e' || peek() == 'E') {
            advance();
            const std::size_t expStart = pos_;
            if (peek() == '+' || peek() == '-') advance();
            while (isDigit(peek())) advance();
            const std::string_view expText = s_.substr(expStart, pos_ - expStart);
            if (expText.empty()) fail("malformed exponent", expStart);
            const char* first = expText.data() + (expText.front() == '+' ? 1 : 0);
            auto [ptr, ec] = std::from_chars(first, expText.data() + expText.size(), exp);
            if (ec != std::errc() || ptr != expText.data() + expText.size())
                fail("malformed exponent", expStart);
            if (exp > kMaxExponent || exp < -kMaxExponent) fail("exponent out of range", expStart);
        }
        d.text = std::string(s_.substr(start, pos_ - start));
        d.exponent = exp - static_cast<long>(fracDigits);
        return d;
    }

    template <Scalar T>
    T readNumber() {
        T value = decimalValue<T>(readDecimal());
        skipSpace();
        if (peek() == '/') {
            advance();
            skipSpace();
            const std::size_t denStart = pos_;
            T den = decimalValue<T>(readDecimal());
            if (ScalarTraits<T>::isZero(den)) fail("zero denominator", denStart);
            value = value / den;
        }
        return value;
    }

    std::size_t position() const { return pos_; }

private:
    std::string_view s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

template <Scalar T>
Coquaternion<T> parseWith(std::string_view text, std::size_t base) {
    Lexer lex(text, base);
    T parts[4] = {T(0), T(0), T(0), T(0)};
    lex.skipSpace();
    if (lex.atEnd()) lex.fail("empty coquaternion");
    bool first = true;
    while (true) {
        lex.skipSpace();
        if (lex.atEnd()) break;
        bool negative = false;
        if (lex.peek() == '+' || lex.peek() == '-') {
            negative = lex.peek() == '-';
            lex.advance();
            lex.skipSpace();
        } else if (!first) {
            lex.fail("expected '+' or '-'");
        }
        std::optional<T> coef;
        if (isDigit(lex.peek()) || lex.peek() == '.') {
            coef = lex.readNumber<T>();
            lex.skipSpace();
        }
        int slot = 0;
        if (isUnit(lex.peek())) {
            slot = lex.peek() - 'i' + 1;
            lex.advance();
        } else if (!coef) {
            lex.fail("expected a number or one of i, j, k");
        }
        T value = coef ? *coef : T(1);
        if (negative) value = -value;
        parts[slot] = parts[slot] + value;
        first = false;
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

template <Scalar T>
bool isNegative(const T& v) {
    return ScalarTraits<T>::lessThan(v, T(0));
}

}  // namespace

template <Scalar T>
Coquaternion<T> parseCoquaternion(std::string_view text) {
    return parseWith<T>(text, 0);
}

template <Scalar T>
T parseScalar(std::string_view text) {
    const Coquaternion<T> q = parseCoquaternion<T>(text);
    if (!q.imaginary().isZero(0.0)) throw ParseError("expected a real scalar", 0, std::string(text));
    return q.w();
}

template <Scalar T>
std::string formatScalar(const T& value) {
    if constexpr (isExact<T>()) {
        return value.get_str();
    } else {
        if (value == 0.0) return "0";  // also folds -0
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
        return std::string(buf, ptr);
    }
}

template <Scalar T>
std::string formatCoquaternion(const Coquaternion<T>& q) {
    const T* comps[4] = {&q.w(), &q.x(), &q.y(), &q.z()};
    static constexpr const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int c = 0; c < 4; ++c) {
        const T& v = *comps[c];
        if (ScalarTraits<T>::isZero(v)) continue;
        const bool negative = isNegative(v);
        const T mag = ScalarTraits<T>::abs(v);
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (c == 0 || !(mag == T(1))) out += formatScalar<T>(mag);
        out += units[c];
    }
    return out.empty() ? "0" : out;
}

template <Scalar T>
std::string formatComplex(const Complex<T>& z) {
    return formatCoquaternion(Coquaternion<T>(z.re, z.im, T(0), T(0)));
}

template <Scalar T>
Matrix<T> parseMatrix(std::string_view text) {
    std::vector<Coquaternion<T>> entries;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t lineStart = 0;
    std::size_t lineNo = 0;
    while (lineStart <= text.size()) {
        std::size_t lineEnd = text.find('\n', lineStart);
        if (lineEnd == std::string_view::npos) lineEnd = text.size();
        ++lineNo;
        std::string_view line = text.substr(lineStart, lineEnd - lineStart);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            std::size_t count = 0;
            std::size_t fieldStart = 0;
            while (true) {
                std::size_t sep = line.find(';', fieldStart);
                const std::size_t fieldEnd = sep == std::string_view::npos ? line.size() : sep;
                const std::string_view field = line.substr(fieldStart, fieldEnd - fieldStart);
                if (field.find_first_not_of(" \t\r") == std::string_view::npos)
                    throw ParseError("line " + std::to_string(lineNo) + ": empty entry",
                                     lineStart + fieldStart, std::string(field));
                entries.push_back(parseWith<T>(field, lineStart + fieldStart));
                ++count;
                if (sep == std::string_view::npos) break;
                fieldStart = sep + 1;
            }
            if (rows == 0) {
                cols = count;
            } else if (count != cols) {
                throw ParseError("line " + std::to_string(lineNo) + ": row has " +
                                     std::to_string(count) + " entries, expected " +
                                     std::to_string(cols),
                                 lineStart, std::string(line));
            }
            ++rows;
        }
        if (lineEnd == text.size()) break;
        lineStart = lineEnd + 1;
    }
    if (rows == 0) throw ParseError("matrix text contains no rows", 0, "");
    return Matrix<T>(rows, cols, std::move(entries));
}

template <Scalar T>
std::string formatMatrix(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out += "; ";
            out += formatCoquaternion(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <Scalar T>
Matrix<T> readMatrixFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read matrix file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseMatrix<T>(buf.str());
}

#define COQLA_INSTANTIATE_IO(T)                                          \
    template T parseScalar<T>(std::string_view);                         \
    template std::string formatScalar<T>(const T&);                      \
    template Coquaternion<T> parseCoquaternion<T>(std::string_view);     \
    template std::string formatCoquaternion<T>(const Coquaternion<T>&);  \
    template std::string formatComplex<T>(const Complex<T>&);            \
    template Matrix<T> parseMatrix<T>(std::string_view);                 \
    template std::string formatMatrix<T>(const Matrix<T>&);              \
    template Matrix<T> readMatrixFile<T>(const std::filesystem::path&);

COQLA_INSTANTIATE_IO(Rational)
COQLA_INSTANTIATE_IO(double)

#undef COQLA_INSTANTIATE_IO

}  // namespace coqla

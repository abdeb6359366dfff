#include "ddbar/scalar.hpp"

#include <cctype>
#include <ostream>

namespace ddbar {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!digits(text, start, text.size()))
            throw ParseError("bad rational literal '" + text + "'");
    } else {
        if (!digits(text, start, slash) || !digits(text, slash + 1, text.size()))
            throw ParseError("bad rational literal '" + text + "'");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(i)");
    Rational n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += re_.get_str();
    if (im_ != 0) {
        if (im_ == 1) {
            out += out.empty() ? "i" : "+i";
        } else if (im_ == -1) {
            out += "-i";
        } else {
            std::string is = im_.get_str();
            if (!out.empty() && is[0] != '-') out += '+';
            out += is + "i";
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace ddbar

#include "graphjoin/rational.hpp"

#include <cctype>

#include "graphjoin/errors.hpp"

namespace graphjoin {

Rational rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Rational r;
    if (r.set_str(num + "/" + den, 10) != 0) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace graphjoin

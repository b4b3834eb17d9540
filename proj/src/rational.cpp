#include "finecurves/rational.hpp"

#include <cctype>

namespace finecurves {

std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, const char* role, bool allow_sign) {
        if (part.empty()) throw ParseError(std::string("missing ") + role + " in '" + s + "'");
        std::size_t i = (allow_sign && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw ParseError("sign without digits in '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad character in rational '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s, "numerator", true);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, "numerator", true);
    check_int(den, "denominator", false); // denominators are plain positive integers
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(Int(num), d);
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den, rem = num % den;
    std::string out = (neg && (whole != 0 || rem != 0)) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += char('0' + static_cast<int>(rem / den));
            rem %= den;
        }
        // trim trailing zeros but keep at least one fractional digit
        auto last = out.find_last_not_of('0');
        if (out[last] == '.') ++last;
        out.erase(last + 1);
    }
    return out;
}

} // namespace finecurves

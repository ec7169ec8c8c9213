#include "voteselect/rational.hpp"

#include "voteselect/errors.hpp"

#include <cctype>

namespace voteselect {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_ratio(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty ratio");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad fraction '" + text + "'");
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(BigInt(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("bad decimal '" + text + "'");
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(BigInt(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac)), scale);
    } else {
        if (!all_digits(s)) throw ParseError("bad integer '" + text + "'");
        value = Rational(BigInt(s));
    }
    return negative ? Rational(-value) : value;
}

std::string format_ratio(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

double ratio_to_double(const Rational& r) {
    return r.convert_to<double>();
}

long floor_to_long(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) q -= 1; // fix truncation toward zero
    return q.convert_to<long>();
}

long ceil_to_long(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) q += 1;
    return q.convert_to<long>();
}

} // namespace voteselect

#include "mmorder/rational.hpp"

#include <cctype>

#include "mmorder/errors.hpp"

namespace mm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
    if (!all_digits(s))
        throw InputError("malformed rational '" + std::string(whole) + "'");
    return Int(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw InputError("empty rational string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw InputError("malformed rational '" + std::string(text) + "'");

    Rat value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(s.substr(0, slash), text);
        Int den = parse_int(s.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        value = Rat(num) / Rat(den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw InputError("malformed rational '" + std::string(text) + "'");
        Int whole = int_part.empty() ? Int(0) : parse_int(int_part, text);
        value = Rat(whole);
        if (!frac_part.empty()) {
            Int frac = parse_int(frac_part, text);
            Int scale = 1;
            for (size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
            value += Rat(frac) / Rat(scale);
        }
    } else {
        value = Rat(parse_int(s, text));
    }
    return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& value) {
    Int num = rat_num(value);
    Int den = rat_den(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int common_denominator(const std::vector<Rat>& values) {
    Int l = 1;
    for (const Rat& v : values) l = boost::multiprecision::lcm(l, rat_den(v));
    return l;
}

}  // namespace mm

#include "topocode/linform.hpp"

#include <cctype>

namespace topocode {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("overflow", "integer addition overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error("overflow", "integer subtraction overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "integer multiplication overflow");
    return r;
}

LinForm sym_abs(const LinForm& f) { return f.sign() < 0 ? -f : f; }

std::string to_string(const LinForm& f) {
    if (f.k == 0) return std::to_string(f.d);
    std::string s = std::to_string(f.k) + "*k";
    s += f.d < 0 ? "-" : "+";
    s += std::to_string(f.d < 0 ? -f.d : f.d) + "*d";
    return s;
}

LinForm parse_linform(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("parse-error", "empty linear form");
    LinForm out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw Error("parse-error", "bad linear form '" + text + "'");
        }
        std::int64_t coef = 1;
        bool has_num = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            try {
                coef = std::stoll(s.substr(i, j - i));
            } catch (const std::exception&) {
                throw Error("parse-error", "coefficient out of range in '" + text + "'");
            }
            has_num = true;
            i = j;
        }
        if (i < s.size() && s[i] == '*') {
            if (!has_num) throw Error("parse-error", "bad linear form '" + text + "'");
            ++i;
        }
        char sym = 0;
        if (i < s.size() && (s[i] == 'k' || s[i] == 'd')) sym = s[i++];
        if (!has_num && sym == 0) throw Error("parse-error", "bad linear form '" + text + "'");
        std::int64_t v = checked_mul(sign, coef);
        if (sym == 'k')
            out.k = checked_add(out.k, v);
        else
            out.d = checked_add(out.d, v);
    }
    return out;
}

}  // namespace topocode

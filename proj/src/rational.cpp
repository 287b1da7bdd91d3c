#include "hyperquadric/rational.hpp"

#include <cctype>
#include <ostream>

namespace hq {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidOperandError("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidOperandError("bad rational literal: " + text);
    bool seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '/') {
            if (seen_slash || i + 1 >= text.size())
                throw InvalidOperandError("bad rational literal: " + text);
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidOperandError("bad rational literal: " + text);
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw InvalidOperandError("bad rational literal: " + text);
    if (q.get_den() == 0) throw InvalidOperandError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string out = "(";
    out += rational_to_string(re_);
    if (im_ > 0) {
        out += "+";
        out += rational_to_string(im_);
    } else {
        out += "-";
        out += rational_to_string(Rational(-im_));
    }
    out += "i)";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

}  // namespace hq

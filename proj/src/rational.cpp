#include "geomjoin/rational.hpp"

#include <cctype>

#include "geomjoin/errors.hpp"

namespace geomjoin {

namespace {

bool isIntegerToken(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parseRat(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!isIntegerToken(num) || (slash != std::string_view::npos && !isIntegerToken(den)))
        throw InputError("malformed rational: '" + std::string(text) + "'");
    BigInt p{std::string(num)};
    if (slash == std::string_view::npos) return Rat(p);
    BigInt q{std::string(den)};
    if (q == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    return Rat(p, q);
}

std::string formatRat(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace geomjoin

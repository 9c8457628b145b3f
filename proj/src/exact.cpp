#include "bellex/exact.hpp"

namespace bellex {

Rat parse_rational(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty numeric token");
    if (tok.find('/') != std::string::npos) {
        Rat r;
        if (r.set_str(tok, 10) != 0) throw std::invalid_argument("bad rational: " + tok);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + tok);
        r.canonicalize();
        return r;
    }
    const auto dot = tok.find('.');
    if (dot == std::string::npos) {
        Rat r;
        if (r.set_str(tok, 10) != 0) throw std::invalid_argument("bad integer: " + tok);
        return r;
    }
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    const std::size_t frac_len = tok.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad decimal: " + tok);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal: " + tok);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

}  // namespace bellex

#include "ssyn/rational.hpp"

#include <cctype>

namespace ssyn {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s = text;
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string intpart, fracpart, denpart;
    enum { INT, FRAC, DEN } state = INT;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (state == INT ? intpart : state == FRAC ? fracpart : denpart) += c;
        } else if (c == '.' && state == INT) {
            state = FRAC;
        } else if (c == '/' && state == INT) {
            state = DEN;
        } else {
            return std::nullopt;
        }
    }
    if (intpart.empty() && fracpart.empty()) return std::nullopt;
    if (state == DEN && denpart.empty()) return std::nullopt;

    mpz_class num(intpart.empty() ? "0" : intpart);
    mpz_class den(1);
    if (state == FRAC && !fracpart.empty()) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracpart.size());
        num = num * scale + mpz_class(fracpart);
        den = scale;
    } else if (state == DEN) {
        den = mpz_class(denpart);
        if (den == 0) return std::nullopt;
    }
    Rational r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int sign(const Rational& r) { return sgn(r); }

void scale_to_coprime_integers(std::vector<Rational>& row) {
    mpz_class lcm_den(1);
    for (const auto& r : row) {
        mpz_class d = r.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class gcd_num(0);
    std::vector<mpz_class> scaled;
    scaled.reserve(row.size());
    for (const auto& r : row) {
        mpz_class v = r.get_num() * (lcm_den / r.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(v);
    }
    if (gcd_num == 0) gcd_num = 1;
    for (size_t i = 0; i < row.size(); ++i) row[i] = Rational(scaled[i] / gcd_num);
}

}  // namespace ssyn

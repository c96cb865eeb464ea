#include "paramdyn/rational.hpp"

#include <cctype>
#include <cmath>

#include "paramdyn/errors.hpp"

namespace paramdyn {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    // mpq_set_str accepts whitespace and some exotic bases; be stricter.
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("bad rational literal: '" + s + "'");
        }
    }
    if (!digits) throw ParseError("bad rational literal: '" + s + "'");

    Rat x;
    if (mpq_set_str(x.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(x.get_mpq_t())) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

double log_abs(const Int& z) {
    if (mpz_sgn(z.get_mpz_t()) == 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

double q_weil_height(const Rat& x) {
    Int num = abs(x.get_num());
    const Int& den = x.get_den();
    const Int& m = (num >= den) ? num : den;  // max(|p|, q) >= 1 always
    if (m == 1) return 0.0;
    return log_abs(m);
}

}  // namespace paramdyn

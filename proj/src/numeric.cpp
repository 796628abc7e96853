#include "words123/numeric.hpp"

#include "words123/error.hpp"

namespace words123 {

Integer parse_integer(const std::string& text) {
    Integer z;
    if (text.empty() || z.set_str(text, 10) != 0) {
        throw InvalidArgument("not an integer: '" + text + "'");
    }
    return z;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw InvalidArgument("not a rational: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw InvalidArgument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace words123

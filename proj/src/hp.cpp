#include "tds/hp.hpp"

namespace tds::numerics {

std::string Real::str(int sig_digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign_prefix;
    if (!digits.empty() && digits[0] == '-') {
        sign_prefix = "-";
        digits.erase(0, 1);
    }
    // mpfr_get_str represents the value as 0.<digits> * 10^e.
    std::string out = sign_prefix + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

}  // namespace tds::numerics

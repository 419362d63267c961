#include "okmat/gaussian.hpp"

#include <sstream>

namespace okmat {

GaussianRational gr_from_long(long long n, long long d) {
    return GaussianRational(make_rat(n, d));
}

GaussianRational GaussianRational::pow(long long e) const {
    if (e == 0) return GaussianRational(1);
    GaussianRational base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    GaussianRational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rat(BigInt(s), BigInt(1));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

} // namespace

std::string GaussianRational::str() const {
    if (im == 0) return rat_str(re);
    std::string imag = rat_str(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rat_str(re) + "+" + imag;
    return rat_str(re) + imag; // sign carried by the imaginary numerator
}

GaussianRational GaussianRational::parse(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("GaussianRational::parse: empty string");

    auto parse_term = [](const std::string& t) -> GaussianRational {
        if (t.find('i') != std::string::npos) {
            std::string coeff = t;
            auto star = coeff.find("*i");
            if (star != std::string::npos)
                coeff = coeff.substr(0, star);
            else
                coeff = coeff.substr(0, coeff.find('i'));
            if (coeff.empty() || coeff == "+") return GaussianRational::unit_i();
            if (coeff == "-") return -GaussianRational::unit_i();
            return {BigRat(0), parse_rat(coeff)};
        }
        return {parse_rat(t), BigRat(0)};
    };

    // Split at a '+' or '-' that is not leading and not right after '/'
    // (rationals here never carry exponents, so this is unambiguous).
    for (size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            GaussianRational a = parse_term(s.substr(0, k));
            GaussianRational b = parse_term(s.substr(k));
            return a + b;
        }
    }
    return parse_term(s);
}

} // namespace okmat

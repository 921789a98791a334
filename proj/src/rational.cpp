#include "symrees/rational.hpp"

#include <functional>

namespace symrees {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(s)));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw division_error("rational with zero denominator: " + s);
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw error("malformed rational literal: " + s);
    }
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(to_string());
}

} // namespace symrees

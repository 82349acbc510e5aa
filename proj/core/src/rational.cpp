#include "curvachay/rational.hpp"

#include "curvachay/errors.hpp"

namespace curvachay {

Rational rat(long numerator, long denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    Rational q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("cannot parse rational: " + s);
    if (q.get_den() == 0) throw InvalidInput("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_sum(const std::vector<Rational>& values) {
    Rational acc = 0;
    for (const auto& v : values) acc += v;
    return acc;
}

}  // namespace curvachay

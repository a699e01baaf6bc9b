#include "cubeknot/rational.hpp"

#include "cubeknot/errors.hpp"

namespace cubeknot {

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    auto dotpos = s.find('.');
    try {
        if (dotpos != std::string::npos) {
            std::string digits = s.substr(0, dotpos) + s.substr(dotpos + 1);
            size_t frac_len = s.size() - dotpos - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw parse_error("bad rational: " + s);
            Int num(digits, 10);
            Int den(1);
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        Rat q(s, 10);
        q.canonicalize();
        if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: " + s);
    }
}

}  // namespace cubeknot

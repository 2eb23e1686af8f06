#include "gcmv/scalar.hpp"

#include <cctype>
#include <ostream>

namespace gcmv {

Scalar Scalar::from_string(std::string_view s) {
    auto valid = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid(num) || !valid(den))
        throw std::invalid_argument("Scalar: malformed rational '" + std::string(s) + "'");
    mpq_class q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0)
        throw std::domain_error("Scalar: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Scalar(q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

} // namespace gcmv

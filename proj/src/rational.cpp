#include "qfr/rational.hpp"

#include <cctype>
#include <ostream>

#include "qfr/errors.hpp"

namespace qfr {

Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_ = from_int64(num).v_ / from_int64(den).v_;
    v_.canonicalize();
}

Rat Rat::from_int64(std::int64_t n) {
    // Decimal text is exact for any width and avoids long-vs-long-long
    // constructor ambiguity in gmpxx.
    return Rat(mpq_class(mpz_class(std::to_string(n))));
}

Rat Rat::parse(const std::string& text) {
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) return false;
        for (std::size_t k = start; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid(num)) throw PreconditionError("malformed rational '" + text + "'");
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        const std::string den = text.substr(slash + 1);
        if (!valid(den)) throw PreconditionError("malformed rational '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw PreconditionError("rational with zero denominator: '" + text + "'");
        q = mpq_class(mpz_class(num), d);
    }
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw PreconditionError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace qfr

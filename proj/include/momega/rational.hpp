#ifndef MOMEGA_RATIONAL_HPP
#define MOMEGA_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "momega/errors.hpp"

namespace momega {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/** Renders like "3/4"; integers render without the denominator. */
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/** Parses "p", "-p" or "p/q" (q > 0 after normalization). */
inline Rational rational_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception& e) {
        throw InputError("bad rational literal '" + s + "': " + e.what());
    }
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline VectorXq to_rational(const VectorXl& v) { return v.cast<Rational>(); }
inline MatrixXq to_rational(const MatrixXl& m) { return m.cast<Rational>(); }

}  // namespace momega

#endif

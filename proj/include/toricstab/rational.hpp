#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace toricstab {

/// Arbitrary-precision rational scalar. Always in lowest terms, denominator > 0.
///
/// Expression templates are disabled so that `auto x = a + b;` yields a value,
/// which keeps the scalar usable inside Eigen expressions without surprises.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rat>;
using RatMat = Mat<Rat>;
using IntVec = Vec<long>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);  // "(p/q, ...)"

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws Error(Parse)
/// on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);
bool is_integer(const Rat& r);
bool is_integral(const RatVec& v);

/// Smallest positive integer multiple of `v` with integer entries, divided by the
/// gcd of those entries. Direction is preserved; the zero vector maps to itself.
Vec<BigInt> primitive_integer_direction(const RatVec& v);

/// Scale factor `s > 0` such that `s * v == primitive_integer_direction(v)`.
Rat primitive_scale(const RatVec& v);

RatVec to_rat(const IntVec& v);
RatVec to_rat(const Vec<BigInt>& v);

/// Lexicographic strict ordering on vectors of equal length.
template <typename Scalar>
bool lex_less(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k) < b(k)) return true;
    if (b(k) < a(k)) return false;
  }
  return false;
}

}  // namespace toricstab

#include "toricstab/rational.hpp"

#include "toricstab/errors.hpp"

#include <cctype>
#include <numeric>

namespace toricstab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::DegenerateNormal: return "DegenerateNormal";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::NotLatticePolytope: return "NotLatticePolytope";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::ThetaConstant: return "ThetaConstant";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

std::string to_string(const Rat& r) {
  return r.str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v(k));
  }
  return out + ")";
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  out = BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  BigInt num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw Error(ErrorKind::Parse, "not a rational: \"" + std::string(text) + "\"");
  } else {
    const auto d = s.substr(slash + 1);
    if (!parse_integer(s.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den))
      throw Error(ErrorKind::Parse, "not a rational: \"" + std::string(text) + "\"");
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rat(num, den);
}

BigInt floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && Rat(q) != r) q -= 1;
  return q;
}

BigInt ceil(const Rat& r) {
  return -floor(-r);
}

bool is_integer(const Rat& r) {
  return denominator(r) == 1;
}

bool is_integral(const RatVec& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!is_integer(v(k))) return false;
  return true;
}

Rat primitive_scale(const RatVec& v) {
  BigInt lcm_den(1);
  for (Eigen::Index k = 0; k < v.size(); ++k) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(v(k))));
  BigInt g(0);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    BigInt scaled = BigInt(numerator(v(k))) * (lcm_den / BigInt(denominator(v(k))));
    g = boost::multiprecision::gcd(g, scaled);
  }
  if (g == 0) return Rat(1);
  return Rat(lcm_den) / Rat(boost::multiprecision::abs(g));
}

Vec<BigInt> primitive_integer_direction(const RatVec& v) {
  const Rat s = primitive_scale(v);
  Vec<BigInt> out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = numerator(Rat(v(k) * s));
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = Rat(v(k));
  return out;
}

RatVec to_rat(const Vec<BigInt>& v) {
  RatVec out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = Rat(v(k));
  return out;
}

}  // namespace toricstab

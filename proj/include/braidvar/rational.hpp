#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "braidvar/errors.hpp"

namespace braidvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

// Accepts "3", "-3", "1/2", "-7/4". Denominator normalization is automatic.
Rat parse_rat(const std::string& s);

// Comma- or whitespace-separated list of rationals, e.g. "2, 1/2".
std::vector<Rat> parse_rat_list(const std::string& s);

std::string rat_list_to_string(const std::vector<Rat>& v);

inline Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    if (den == 0) throw DivisionByZero("zero denominator in rational literal");
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(parse_rat(cur));
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

inline std::string rat_list_to_string(const std::vector<Rat>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace braidvar

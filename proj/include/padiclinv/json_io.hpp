#pragma once

#include "padiclinv/gl3.hpp"
#include "padiclinv/linvariant.hpp"
#include "padiclinv/measures.hpp"
#include "padiclinv/steinberg.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace padiclinv {

using Json = nlohmann::ordered_json;

// {p, val, unit, prec}: p^val * (unit mod p^prec); zero has prec 0 and val its absolute precision
Json to_json(const Padic& x);
Padic padic_from_json(const Json& j);
Json to_json(const Homomorphism& h);   // {log, ord}
Json to_json(const DualP& d);          // {base, eps}
Json to_json(const Mat3& g);           // row-major array of nine padic objects
Json to_json(const Flag& f);
std::string rational_string(const Rational& r);   // "num/den"

// Rational strings or integers.
Padic padic_from_value(i64 p, const Json& v, int prec);
// Row-major, flat (9) or nested (3x3), entries rational strings or integers.
Mat3 mat3_from_json(i64 p, const Json& j, int prec);
// {p, n, table: {residue: value}}, optional prec
Measure measure_from_json(const Json& j, int prec);
// {p, teichmuller: j} or {p, level, table: {residue: value}}; empty or {p} gives the trivial character
Character character_from_json(const Json& j, int prec);
// {point: [...], plane: [...], prec}
Flag flag_from_json(const Json& j);

std::vector<std::string> split_list(const std::string& s);   // on commas, trimmed
std::vector<i64> parse_int_list(const std::string& s);

}  // namespace padiclinv

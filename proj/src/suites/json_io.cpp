#include "padiclinv/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace padiclinv {

Json to_json(const Padic& x)
{
    if (x.is_zero()) return Json{{"p", x.prime()}, {"val", x.val_lower()}, {"unit", 0}, {"prec", 0}};
    return Json{{"p", x.prime()}, {"val", x.valuation()}, {"unit", x.unit()}, {"prec", x.rel_prec()}};
}

Padic padic_from_json(const Json& j)
{
    const i64 p = j.at("p").get<i64>();
    const int val = j.at("val").get<int>();
    const int prec = j.at("prec").get<int>();
    if (prec == 0) return Padic::zero(p, val);
    return Padic::from_parts(p, val, j.at("unit").get<i64>(), prec);
}

Json to_json(const Homomorphism& h) { return Json{{"log", to_json(h.a)}, {"ord", to_json(h.b)}}; }

Json to_json(const DualP& d) { return Json{{"base", to_json(d.base)}, {"eps", to_json(d.eps)}}; }

Json to_json(const Mat3& g)
{
    Json a = Json::array();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.push_back(to_json(g(i, j)));
    return a;
}

Json to_json(const Flag& f) { return Json{{"point", f.point}, {"plane", f.plane}}; }

std::string rational_string(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Padic padic_from_value(i64 p, const Json& v, int prec)
{
    if (v.is_number_integer()) return Padic::from_int(p, v.get<i64>(), prec);
    if (v.is_string()) return Padic::from_string(p, v.get<std::string>(), prec);
    if (v.is_object()) return padic_from_json(v);
    throw std::invalid_argument("expected a rational string or an integer");
}

Mat3 mat3_from_json(i64 p, const Json& j, int prec)
{
    std::vector<Json> flat;
    for (const auto& row : j) {
        if (row.is_array())
            for (const auto& x : row) flat.push_back(x);
        else
            flat.push_back(row);
    }
    if (flat.size() != 9) throw std::invalid_argument("matrix needs nine entries");
    std::array<Padic, 9> e;
    for (std::size_t i = 0; i < 9; ++i) e[i] = padic_from_value(p, flat[i], prec);
    return Mat3(e);
}

Measure measure_from_json(const Json& j, int prec)
{
    const i64 p = j.at("p").get<i64>();
    const int n = j.at("n").get<int>();
    if (j.contains("prec")) prec = j["prec"].get<int>();
    Measure mu = zero_measure(p, n, prec);
    for (const auto& [key, val] : j.at("table").items()) {
        i64 a = mod_floor(std::stoll(key), mu.modulus());
        if (a % p == 0) throw std::invalid_argument("measure table has a non-unit residue " + key);
        mu.table[static_cast<std::size_t>(a)] = padic_from_value(p, val, prec);
    }
    return mu;
}

Character character_from_json(const Json& j, int prec)
{
    const i64 p = j.at("p").get<i64>();
    if (j.contains("teichmuller")) return teichmuller_character(p, j["teichmuller"].get<int>(), prec);
    if (!j.contains("table")) return trivial_character(p, prec);
    const int level = j.value("level", 1);
    const i64 q = ipow(p, level);
    std::vector<Padic> vals(static_cast<std::size_t>(q), Padic::zero(p, prec));
    for (const auto& [key, val] : j["table"].items())
        vals[static_cast<std::size_t>(mod_floor(std::stoll(key), q))] = padic_from_value(p, val, prec);
    return character_from_table(p, level, vals);
}

Flag flag_from_json(const Json& j)
{
    Flag f;
    f.point = j.at("point").get<std::array<i64, 3>>();
    f.plane = j.at("plane").get<std::array<i64, 3>>();
    i64 dot = 0;
    for (int i = 0; i < 3; ++i) dot += f.point[static_cast<std::size_t>(i)] * f.plane[static_cast<std::size_t>(i)];
    if (dot != 0) throw std::invalid_argument("point does not lie on the plane");
    f.point = primitive(f.point);
    f.plane = primitive(f.plane);
    return f;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

std::vector<i64> parse_int_list(const std::string& s)
{
    std::vector<i64> out;
    for (const auto& t : split_list(s)) out.push_back(std::stoll(t));
    return out;
}

}  // namespace padiclinv

#pragma once

// Text and JSON forms of polynomials, factored values and series.
//
// JSON polynomial: {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}
// with terms in descending grlex order, so equal values serialize to equal
// bytes.

#include <cctype>
#include <string>

#include <json.hpp>

#include "maclab/rational_function.hpp"
#include "maclab/series.hpp"

namespace maclab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Poly& p) {
    Json j;
    j["vars"] = p.ring()->names();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json e = Json::array();
        for (std::size_t i = 0; i < p.ring()->size(); ++i) e.push_back(t.mono[i]);
        terms.push_back({{"exp", e}, {"coef", to_string(t.coef)}});
    }
    j["terms"] = terms;
    return j;
}

inline Poly poly_from_json(const Json& j) {
    try {
        RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
        std::vector<Poly::Term> terms;
        for (const auto& t : j.at("terms")) {
            const auto& e = t.at("exp");
            if (e.size() != ring->size()) throw ParseError("exponent vector has wrong length");
            Monomial m;
            for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i].get<Monomial::value_type>();
            terms.push_back({m, parse_rational(t.at("coef").get<std::string>())});
        }
        return Poly::from_terms(ring, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const FactoredRational& r) {
    Json j;
    j["vars"] = r.ring()->names();
    j["coef"] = to_string(r.coefficient());
    Json e = Json::array();
    for (std::size_t i = 0; i < r.ring()->size(); ++i) e.push_back(r.unit_monomial()[i]);
    j["unit_exp"] = e;
    Json fs = Json::array();
    for (const auto& [f, k] : r.factors()) fs.push_back({{"factor", to_json(f)["terms"]}, {"mult", k}});
    j["factors"] = fs;
    return j;
}

inline FactoredRational factored_from_json(const Json& j) {
    try {
        RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
        const auto& e = j.at("unit_exp");
        if (e.size() != ring->size()) throw ParseError("exponent vector has wrong length");
        Monomial m;
        for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i].get<Monomial::value_type>();
        FactoredRational r(ring, parse_rational(j.at("coef").get<std::string>()), m);
        for (const auto& f : j.at("factors"))
            r.mul_factor(poly_from_json({{"vars", j.at("vars")}, {"terms", f.at("factor")}}), f.at("mult").get<int>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const QTSeries& s) {
    Json j = to_json(s.poly());
    j["order"] = s.order();
    return j;
}

inline QTSeries series_from_json(const Json& j) {
    Poly p = poly_from_json(j);
    try {
        return QTSeries(p, j.at("order").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

// {"vars", "numerator": terms, "denominator": [{"factor": terms, "mult": k}]}
inline Json to_json(const RationalFunction& r) {
    Json j;
    j["vars"] = r.ring()->names();
    j["numerator"] = to_json(r.numerator())["terms"];
    Json d = Json::array();
    for (const auto& [f, k] : r.denominator_factors()) d.push_back({{"factor", to_json(f)["terms"]}, {"mult", k}});
    j["denominator"] = d;
    return j;
}

inline RationalFunction rational_function_from_json(const Json& j) {
    try {
        Poly num = poly_from_json({{"vars", j.at("vars")}, {"terms", j.at("numerator")}});
        if (num.is_zero()) return RationalFunction::zero(num.ring());
        FactoredRational r = FactoredRational::from_poly(num);
        for (const auto& d : j.at("denominator"))
            r.mul_factor(poly_from_json({{"vars", j.at("vars")}, {"terms", d.at("factor")}}), -d.at("mult").get<int>());
        return RationalFunction::from(r);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

// Parses the canonical text form ("2*q^2*z1^-1 - 1/3*t + 1") and anything
// close to it: terms of products of rationals and var^int powers.
inline Poly parse_poly(const RingPtr& ring, const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected integer in '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    std::vector<Poly::Term> terms;
    skip();
    if (text.substr(i) == "0") return Poly(ring);
    int sign = 1;
    if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
    } else if (i < text.size() && text[i] == '+') {
        ++i;
    }
    while (true) {
        Rational c = sign;
        Monomial m;
        bool any = false;
        while (true) {
            skip();
            if (i >= text.size()) break;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t start = i;
                while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
                c *= parse_rational(text.substr(start, i - start));
            } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
                std::size_t start = i;
                while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
                std::string name = text.substr(start, i - start);
                int e = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = read_int();
                }
                std::size_t v = ring->index(name);
                m[v] = static_cast<Monomial::value_type>(m[v] + e);
            } else {
                throw ParseError("unexpected character in '" + text + "'");
            }
            any = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term in '" + text + "'");
        terms.push_back({m, c});
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+') {
            sign = 1;
        } else if (text[i] == '-') {
            sign = -1;
        } else {
            throw ParseError("expected + or - in '" + text + "'");
        }
        ++i;
    }
    return Poly::from_terms(ring, std::move(terms));
}

}  // namespace maclab

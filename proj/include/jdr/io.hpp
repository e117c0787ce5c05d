/*
   Copyright 2026 The jdr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JDR_IO_HPP
#define JDR_IO_HPP

/*
 * JSON files. Scalars are strings "p/q" (integers also accepted on input),
 * polynomials in x are ascending coefficient arrays, rational functions are
 * either such an array or {"num": [...], "den": [...]}.
 *
 * problem:   {"field": "Q" | {"Fp": p},
 *             "polynomials": [{"id": "z", "coeffs": [c_0, ..., c_d]}],
 *             "pseudopolynomial": {"alphas": ["alpha"],
 *                                  "terms": [{"coeff": [...], "factors": [["z", "alpha"]]}]}}
 * template:  {"entries": [{"order": m, "monomial": {"alpha": j}}]}  or  {"degree_template": {"degree": n, "alpha": "alpha"}}
 * specs:     {"strategy": "grid"}  or  {"strategy": "explicit", "specializations": [{"alpha": 1}]}
 * resolvent: {"status": "ok" | "identically_zero", "template", "raw_t", "content", "primitive_r",
 *             "provenance": {"method", "specializations"}, "problem"}
 *
 * Output is key-sorted and therefore byte-deterministic.
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "elimination.hpp"
#include "error.hpp"
#include "powersum.hpp"
#include "problem.hpp"

namespace jdr {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_field(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::Parse, (path.empty() ? "/" : path) + ": " + what);
}

inline const json& member(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) bad_field(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad_field(path, "missing field '" + key + "'");
    return *it;
}

inline std::string string_at(const json& j, const std::string& path) {
    if (!j.is_string()) bad_field(path, "expected a string");
    return j.get<std::string>();
}

inline unsigned unsigned_at(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) bad_field(path, "expected a nonnegative integer");
    const auto v = j.get<std::uint64_t>();
    if (v > 1000000) bad_field(path, "value too large");
    return static_cast<unsigned>(v);
}

inline const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) bad_field(path, "expected an array");
    return j;
}

} // namespace detail

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

inline json read_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json_text(ss.str());
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, file + ": " + e.what());
    }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline FieldTag field_from_json(const json& j, const std::string& path = "/field") {
    if (j.is_string() && j.get<std::string>() == "Q") return {};
    if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
        const json& p = j.at("Fp");
        if (!p.is_number_unsigned()) detail::bad_field(path + "/Fp", "expected a prime");
        const auto v = p.get<std::uint64_t>();
        if (v >= max_fp_modulus || !is_prime_u64(v))
            throw Error(ErrorKind::Validation, path + "/Fp: modulus must be a prime below 2^61");
        return {v};
    }
    detail::bad_field(path, "expected \"Q\" or {\"Fp\": p}");
}

inline json field_to_json(const FieldTag& f) {
    if (f.is_rational()) return "Q";
    return json{{"Fp", f.modulus}};
}

template <class K>
K scalar_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return field_traits<K>::parse(j.get<std::string>());
        if (j.is_number_integer()) return K(j.get<long>());
    } catch (const Error& e) {
        detail::bad_field(path, e.what());
    }
    detail::bad_field(path, "expected a rational string");
}

template <class K>
XPoly<K> xpoly_from_json(const json& j, const std::string& path) {
    detail::array_at(j, path);
    std::vector<K> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(scalar_from_json<K>(j[k], path + "/" + std::to_string(k)));
    return XPoly<K>(std::move(c));
}

template <class K>
json xpoly_to_json(const XPoly<K>& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(field_traits<K>::str(c));
    return a;
}

template <class K>
XRat<K> xrat_from_json(const json& j, const std::string& path) {
    if (j.is_array()) return XRat<K>(xpoly_from_json<K>(j, path));
    if (j.is_object()) {
        auto num = xpoly_from_json<K>(detail::member(j, "num", path), path + "/num");
        auto den = xpoly_from_json<K>(detail::member(j, "den", path), path + "/den");
        if (den.is_zero()) throw Error(ErrorKind::Validation, path + "/den: zero denominator");
        return XRat<K>(std::move(num), std::move(den));
    }
    detail::bad_field(path, "expected a coefficient array or {\"num\", \"den\"}");
}

template <class K>
json xrat_to_json(const XRat<K>& f) {
    if (f.is_polynomial()) return xpoly_to_json(f.num());
    return json{{"num", xpoly_to_json(f.num())}, {"den", xpoly_to_json(f.den())}};
}

/// Needs the field's context (FpContext) to be active already.
template <class K>
ProblemSpec<K> problem_from_json(const json& j) {
    ProblemSpec<K> p;
    p.field = field_from_json(detail::member(j, "field", ""));
    if (p.field != field_traits<K>::tag()) throw Error(ErrorKind::Validation, "/field: does not match the active field");
    const json& polys = detail::array_at(detail::member(j, "polynomials", ""), "/polynomials");
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const std::string path = "/polynomials/" + std::to_string(i);
        MonicPoly<K> P;
        P.id = detail::string_at(detail::member(polys[i], "id", path), path + "/id");
        const json& cs = detail::array_at(detail::member(polys[i], "coeffs", path), path + "/coeffs");
        for (std::size_t k = 0; k < cs.size(); ++k)
            P.coeffs.push_back(xrat_from_json<K>(cs[k], path + "/coeffs/" + std::to_string(k)));
        p.polynomials.push_back(std::move(P));
    }
    const json& pseudo = detail::member(j, "pseudopolynomial", "");
    const json& alphas = detail::array_at(detail::member(pseudo, "alphas", "/pseudopolynomial"), "/pseudopolynomial/alphas");
    for (std::size_t a = 0; a < alphas.size(); ++a)
        p.alphas.push_back(detail::string_at(alphas[a], "/pseudopolynomial/alphas/" + std::to_string(a)));
    const json& terms = detail::array_at(detail::member(pseudo, "terms", "/pseudopolynomial"), "/pseudopolynomial/terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string path = "/pseudopolynomial/terms/" + std::to_string(t);
        PseudoTerm<K> term;
        if (terms[t].is_object() && terms[t].contains("coeff"))
            term.coeff = xrat_from_json<K>(terms[t].at("coeff"), path + "/coeff");
        const json& fs = detail::array_at(detail::member(terms[t], "factors", path), path + "/factors");
        for (std::size_t f = 0; f < fs.size(); ++f) {
            const std::string fp = path + "/factors/" + std::to_string(f);
            if (!fs[f].is_array() || fs[f].size() != 2) detail::bad_field(fp, "expected [polynomial id, symbol]");
            const std::string pid = detail::string_at(fs[f][0], fp + "/0");
            const std::string sym = detail::string_at(fs[f][1], fp + "/1");
            if (!term.exponents.emplace(pid, sym).second)
                throw Error(ErrorKind::Validation, fp + ": polynomial '" + pid + "' appears twice in one term");
        }
        p.terms.push_back(std::move(term));
    }
    p.validate();
    return p;
}

template <class K>
json problem_to_json(const ProblemSpec<K>& p) {
    json polys = json::array();
    for (const auto& P : p.polynomials) {
        json cs = json::array();
        for (const auto& c : P.coeffs) cs.push_back(xrat_to_json(c));
        polys.push_back({{"id", P.id}, {"coeffs", cs}});
    }
    json terms = json::array();
    for (const auto& t : p.terms) {
        json fs = json::array();
        for (const auto& [pid, sym] : t.exponents) fs.push_back(json::array({pid, sym}));
        terms.push_back({{"coeff", xrat_to_json(t.coeff)}, {"factors", fs}});
    }
    return {{"field", field_to_json(p.field)},
            {"polynomials", polys},
            {"pseudopolynomial", {{"alphas", p.alphas}, {"terms", terms}}}};
}

inline Monomial monomial_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) detail::bad_field(path, "expected {symbol: exponent}");
    std::map<std::string, unsigned> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = detail::unsigned_at(it.value(), path + "/" + it.key());
    return Monomial(m);
}

inline json monomial_to_json(const Monomial& m) {
    json o = json::object();
    for (const auto& [s, e] : m.factors()) o[s] = e;
    return o;
}

inline ResolventTemplate template_from_json(const json& j, const std::string& path = "") {
    if (j.is_object() && j.contains("degree_template")) {
        const json& t = j.at("degree_template");
        return degree_template(detail::unsigned_at(detail::member(t, "degree", path + "/degree_template"), path + "/degree_template/degree"),
                              detail::string_at(detail::member(t, "alpha", path + "/degree_template"), path + "/degree_template/alpha"));
    }
    const json& es = detail::array_at(detail::member(j, "entries", path), path + "/entries");
    ResolventTemplate tpl;
    for (std::size_t c = 0; c < es.size(); ++c) {
        const std::string ep = path + "/entries/" + std::to_string(c);
        TemplateEntry e;
        e.order = detail::unsigned_at(detail::member(es[c], "order", ep), ep + "/order");
        if (es[c].contains("monomial")) e.mono = monomial_from_json(es[c].at("monomial"), ep + "/monomial");
        tpl.entries.push_back(std::move(e));
    }
    tpl.validate();
    return tpl;
}

inline json template_to_json(const ResolventTemplate& t) {
    json es = json::array();
    for (const auto& e : t.entries) es.push_back({{"order", e.order}, {"monomial", monomial_to_json(e.mono)}});
    return {{"entries", es}};
}

inline Specialization specialization_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) detail::bad_field(path, "expected {symbol: value}");
    Specialization s;
    for (auto it = j.begin(); it != j.end(); ++it) s[it.key()] = detail::unsigned_at(it.value(), path + "/" + it.key());
    return s;
}

inline json specializations_to_json(const std::vector<Specialization>& specs) {
    json a = json::array();
    for (const auto& s : specs) a.push_back(json(s));
    return a;
}

struct SpecRequest {
    SpecStrategy strategy = SpecStrategy::Grid;
    std::vector<Specialization> given;
};

inline SpecRequest specs_from_json(const json& j) {
    SpecRequest r;
    const json* list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else {
        const std::string s = detail::string_at(detail::member(j, "strategy", ""), "/strategy");
        if (s == "grid") return r;
        if (s != "explicit") detail::bad_field("/strategy", "expected \"grid\" or \"explicit\"");
        list = &detail::array_at(detail::member(j, "specializations", ""), "/specializations");
    }
    r.strategy = SpecStrategy::Explicit;
    for (std::size_t k = 0; k < list->size(); ++k)
        r.given.push_back(specialization_from_json((*list)[k], "/specializations/" + std::to_string(k)));
    return r;
}

template <class K>
struct ResolventFile {
    ProblemSpec<K> problem;
    ResolventOutcome<K> outcome;

    bool ok() const { return std::holds_alternative<Resolvent<K>>(outcome); }
};

template <class K>
json resolvent_to_json(const ResolventFile<K>& f) {
    json j;
    j["problem"] = problem_to_json(f.problem);
    if (const auto* r = std::get_if<Resolvent<K>>(&f.outcome)) {
        json raw = json::array(), prim = json::array();
        for (const auto& t : r->raw_t) raw.push_back(xpoly_to_json(t));
        for (const auto& t : r->primitive_r) prim.push_back(xpoly_to_json(t));
        j["status"] = "ok";
        j["template"] = template_to_json(r->tpl);
        j["raw_t"] = raw;
        j["content"] = xpoly_to_json(r->content);
        j["primitive_r"] = prim;
        j["provenance"] = {{"method", r->method}, {"specializations", specializations_to_json(r->specs)}};
    } else {
        const auto& z = std::get<IdenticallyZero>(f.outcome);
        j["status"] = "identically_zero";
        j["template"] = template_to_json(z.tpl);
        j["hint"] = z.hint;
        j["provenance"] = {{"method", z.method}, {"specializations", specializations_to_json(z.specs)}};
    }
    return j;
}

template <class K>
ResolventFile<K> resolvent_from_json(const json& j) {
    ResolventFile<K> f{problem_from_json<K>(detail::member(j, "problem", "")), IdenticallyZero{}};
    const std::string status = detail::string_at(detail::member(j, "status", ""), "/status");
    ResolventTemplate tpl = template_from_json(detail::member(j, "template", ""), "/template");
    const json& prov = detail::member(j, "provenance", "");
    std::vector<Specialization> specs;
    const json& sl = detail::array_at(detail::member(prov, "specializations", "/provenance"), "/provenance/specializations");
    for (std::size_t k = 0; k < sl.size(); ++k)
        specs.push_back(specialization_from_json(sl[k], "/provenance/specializations/" + std::to_string(k)));

    if (status == "identically_zero") {
        IdenticallyZero z{std::move(tpl), std::move(specs)};
        if (j.contains("hint")) z.hint = detail::string_at(j.at("hint"), "/hint");
        z.method = detail::string_at(detail::member(prov, "method", "/provenance"), "/provenance/method");
        f.outcome = std::move(z);
        return f;
    }
    if (status != "ok") detail::bad_field("/status", "expected \"ok\" or \"identically_zero\"");
    Resolvent<K> r;
    r.tpl = std::move(tpl);
    r.specs = std::move(specs);
    r.method = detail::string_at(detail::member(prov, "method", "/provenance"), "/provenance/method");
    auto polys = [&](const char* key) {
        std::vector<XPoly<K>> out;
        const json& a = detail::array_at(detail::member(j, key, ""), std::string("/") + key);
        for (std::size_t k = 0; k < a.size(); ++k)
            out.push_back(xpoly_from_json<K>(a[k], std::string("/") + key + "/" + std::to_string(k)));
        if (out.size() != r.tpl.size())
            throw Error(ErrorKind::Validation, std::string("/") + key + ": one entry per template entry required");
        return out;
    };
    r.raw_t = polys("raw_t");
    r.primitive_r = polys("primitive_r");
    r.content = xpoly_from_json<K>(detail::member(j, "content", ""), "/content");
    for (std::size_t c = 0; c < r.raw_t.size(); ++c)
        if (r.content * r.primitive_r[c] != r.raw_t[c])
            throw Error(ErrorKind::Validation, "/primitive_r/" + std::to_string(c) + ": content * primitive differs from raw_t");
    f.outcome = std::move(r);
    return f;
}

/// Runs fn.template operator()<K>() with K and its context chosen by the field.
template <class Fn>
decltype(auto) with_field(const FieldTag& field, Fn&& fn) {
    if (field.is_rational()) return fn.template operator()<Rational>();
    FpContext ctx(field.modulus);
    return fn.template operator()<Fp>();
}

} // namespace jdr

#endif // JDR_IO_HPP

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

// jdr: command-line front end. Exit status 0 ok, 1 error, 2 identically zero.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jdr/jdr.hpp"

namespace {

using namespace jdr;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_zero = 2;

void emit(const json& j, const std::string& out) {
    const std::string text = dump(j);
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, "cannot write '" + out + "'");
    f << text;
}

void report(std::string_view kind, const std::string& message) {
    json e = {{"error", {{"kind", std::string(kind)}, {"message", message}}}};
    std::cerr << e.dump() << "\n";
}

struct Options {
    std::string problem, tpl, specs, method = "powersum", out, resolvent, x0 = "1";
    std::vector<unsigned> orders;
    std::vector<std::string> subst;
    unsigned degree = 0, max = 0, m = 0, k = 0, alpha = 0, precision = 0;
};

int cmd_powersums(const Options& o) {
    const json pj = read_json_file(o.problem);
    return with_field(field_from_json(detail::member(pj, "field", "")), [&]<class K>() {
        const auto p = problem_from_json<K>(pj);
        json tables = json::object();
        for (const auto& P : p.polynomials) {
            json row = json::array();
            for (const auto& v : powersums_from_elementary(P, o.max)) row.push_back(xrat_to_json(v));
            tables[P.id] = row;
        }
        emit({{"field", field_to_json(p.field)}, {"powersums", tables}}, o.out);
        return exit_ok;
    });
}

int cmd_resolve(const Options& o) {
    const json pj = read_json_file(o.problem);
    return with_field(field_from_json(detail::member(pj, "field", "")), [&]<class K>() {
        const auto p = problem_from_json<K>(pj);
        ResolventFile<K> file{p, IdenticallyZero{}};
        if (o.method == "eliminate") {
            const auto orders = o.orders.empty() ? auto_orders(p) : o.orders;
            auto res = eliminate_resolvent(p, orders);
            if (const auto* l = std::get_if<Lodo<K>>(&res)) {
                file.outcome = resolvent_from_lodo(*l);
            } else {
                IdenticallyZero z;
                z.method = "eliminate";
                z.hint = "every cofactor vanishes; retry with other orders";
                file.outcome = z;
            }
        } else {
            ResolventTemplate tpl;
            if (!o.tpl.empty()) tpl = template_from_json(read_json_file(o.tpl));
            else if (o.degree) tpl = degree_template(o.degree, p.alphas.front());
            else throw Error(ErrorKind::Validation, "the powersum method needs --template or --degree-template");
            SpecRequest req;
            if (!o.specs.empty()) req = specs_from_json(read_json_file(o.specs));
            const auto specs = default_specializations(tpl, p, req.strategy, req.given);
            file.outcome = powersum_resolvent(p, tpl, specs);
        }
        emit(resolvent_to_json(file), o.out);
        return file.ok() ? exit_ok : exit_zero;
    });
}

int cmd_verify(const Options& o) {
    const json rj = read_json_file(o.resolvent);
    const json pj = o.problem.empty() ? detail::member(rj, "problem", "") : read_json_file(o.problem);
    return with_field(field_from_json(detail::member(pj, "field", "")), [&]<class K>() {
        const auto file = resolvent_from_json<K>(rj);
        const auto p = problem_from_json<K>(pj);
        const auto* r = std::get_if<Resolvent<K>>(&file.outcome);
        if (!r) {
            report("IdenticallyZero", "the resolvent file holds an identically zero operator");
            return exit_zero;
        }
        const auto residue = apply_lodo(to_lodo(*r), p);
        if (!residue.is_zero())
            throw Error(ErrorKind::NotAnnihilated, std::to_string(residue.entries().size()) +
                                                       " tensor coordinates of R y are nonzero");
        emit({{"annihilated", true}}, o.out);
        return exit_ok;
    });
}

int cmd_eval(const Options& o) {
    const json rj = read_json_file(o.resolvent);
    const FieldTag field = field_from_json(detail::member(detail::member(rj, "problem", ""), "field", "/problem"));
    if (!field.is_rational()) throw Error(ErrorKind::Validation, "numeric evaluation needs the field Q");
    const auto file = resolvent_from_json<Rational>(rj);
    const auto* r = std::get_if<Resolvent<Rational>>(&file.outcome);
    if (!r) {
        report("IdenticallyZero", "the resolvent file holds an identically zero operator");
        return exit_zero;
    }
    const unsigned digits = o.precision ? o.precision : eval_precision(default_eval_digits);
    PrecisionGuard guard(digits + 10);
    std::map<std::string, Real> subs;
    for (const auto& s : o.subst) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Parse, "expected sym=value, got '" + s + "'");
        subs[s.substr(0, eq)] = parse_real(s.substr(eq + 1));
    }
    const Rational x0 = Rational::parse(o.x0);
    const Real res = numeric_residual(to_lodo(*r), subs, file.problem, x0, digits);
    emit({{"residual", res.str(8, std::ios_base::scientific)}, {"x0", x0.str()}, {"precision", digits}}, o.out);
    return exit_ok;
}

int cmd_bell(const Options& o) {
    emit({{"m", o.m}, {"k", o.k}, {"b", bell_b(o.m, o.k).get_str()}}, o.out);
    return exit_ok;
}

int cmd_logres(const Options& o) {
    const auto l = log_resolvent<Rational>(o.alpha);
    json ops = json::object();
    for (const auto& [m, c] : l.terms()) ops[std::to_string(m)] = xrat_to_json(c.constant_term());
    emit({{"alpha", o.alpha}, {"coefficients", ops}, {"text", l.str()}}, o.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint linear differential resolvents of polynomial systems"};
    app.require_subcommand(1);
    Options o;

    auto* ps = app.add_subcommand("powersums", "Newton powersum tables p_0..p_N");
    ps->add_option("--problem", o.problem, "problem file")->required();
    ps->add_option("--max", o.max, "largest index N")->required();
    ps->add_option("--out", o.out, "output file (default stdout)");

    auto* rs = app.add_subcommand("resolve", "compute a resolvent");
    rs->add_option("--problem", o.problem, "problem file")->required();
    rs->add_option("--template", o.tpl, "template file");
    rs->add_option("--degree-template", o.degree, "use the degree-n single-polynomial template");
    rs->add_option("--specs", o.specs, "specializations file (default: grid)");
    rs->add_option("--method", o.method, "powersum or eliminate")->check(CLI::IsMember({"powersum", "eliminate"}));
    rs->add_option("--orders", o.orders, "derivative orders for elimination, e.g. 0,1,2")->delimiter(',');
    rs->add_option("--out", o.out, "output file (default stdout)");

    auto* vs = app.add_subcommand("verify", "symbolic annihilation check");
    vs->add_option("--resolvent", o.resolvent, "resolvent file")->required();
    vs->add_option("--problem", o.problem, "problem file (default: the one embedded in the resolvent)");
    vs->add_option("--out", o.out, "output file (default stdout)");

    auto* es = app.add_subcommand("eval", "numeric residual at a sample point");
    es->add_option("--resolvent", o.resolvent, "resolvent file")->required();
    es->add_option("--subst", o.subst, "sym=value (decimal, p/q, pi, e, sqrt(v))");
    es->add_option("--x0", o.x0, "rational sample point");
    es->add_option("--precision", o.precision, "decimal digits (default 30 or JDR_EVAL_PRECISION)");
    es->add_option("--out", o.out, "output file (default stdout)");

    auto* bs = app.add_subcommand("bell", "integer b_{m,k}");
    bs->add_option("--m", o.m)->required();
    bs->add_option("--k", o.k)->required();
    bs->add_option("--out", o.out, "output file (default stdout)");

    auto* ls = app.add_subcommand("logres", "resolvent of e^{alpha x} + (ln x)^alpha at integer alpha");
    ls->add_option("--alpha", o.alpha)->required();
    ls->add_option("--out", o.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report("UsageError", e.what());
        return exit_error;
    }

    try {
        if (*ps) return cmd_powersums(o);
        if (*rs) return cmd_resolve(o);
        if (*vs) return cmd_verify(o);
        if (*es) return cmd_eval(o);
        if (*bs) return cmd_bell(o);
        if (*ls) return cmd_logres(o);
    } catch (const Error& e) {
        report(e.name(), e.what());
    } catch (const std::exception& e) {
        report("InternalError", e.what());
    }
    return exit_error;
}

#include "nefres/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nefres/errors.hpp"

namespace nefres {

namespace {

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool scalar_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string join(const Json& a, const std::string& sep) {
    std::string s;
    for (const auto& x : a) s += (s.empty() ? "" : sep) + scalar_str(x);
    return s;
}

void tsv(const Json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) tsv(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i) tsv(j[i], path + "." + std::to_string(i), out);
    } else {
        out << path << '\t' << (j.is_array() ? join(j, ",") : scalar_str(j)) << '\n';
    }
}

void pretty(const Json& j, int indent, std::ostream& out) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            bool matrix = v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), scalar_array);
            if (v.is_primitive() || scalar_array(v)) {
                out << pad << k << ": " << (v.is_array() ? "[" + join(v, ", ") + "]" : scalar_str(v)) << '\n';
            } else if (matrix) {
                std::size_t w = 1;
                for (const auto& row : v)
                    for (const auto& x : row) w = std::max(w, scalar_str(x).size());
                out << pad << k << ":\n";
                for (const auto& row : v) {
                    out << pad << "  ";
                    for (const auto& x : row) out << std::setw(static_cast<int>(w) + 1) << scalar_str(x);
                    out << '\n';
                }
            } else {
                out << pad << k << ":\n";
                pretty(v, indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_primitive() || scalar_array(j[i])) {
                out << pad << "- " << (j[i].is_array() ? "[" + join(j[i], ", ") + "]" : scalar_str(j[i])) << '\n';
            } else {
                out << pad << "- #" << i << '\n';
                pretty(j[i], indent + 2, out);
            }
        }
    } else {
        out << pad << scalar_str(j) << '\n';
    }
}

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("expected a comma-separated list of integers, got '" + s + "'");
        }
    }
    if (out.empty()) throw InvalidInput("empty integer list");
    return out;
}

PicClass parse_pic(const Variety& v, const std::string& s) {
    auto xs = parse_ints(s);
    PicClass p = xs.size() == 1 && v.picard_rank() == 2 ? PicClass::hyperplane(v, xs[0]) : PicClass(xs);
    p.check(v);
    return p;
}

struct Opts {
    std::string variety;
    int rank = 0;
    std::string c1, dmin, twist, e0, c2, table, flavor = "line", case_name;
    std::optional<Int> e;
    bool big = false, all = false, reduce = false;
    int two_step = 0;
    std::vector<std::string> facts;
    std::string output = "json";
};

struct Failed {};

Variety need_variety(const Opts& o) {
    if (o.variety.empty()) throw InvalidInput("--variety is required");
    return Variety::parse(o.variety);
}

NefProblem need_problem(const Opts& o) {
    Variety v = need_variety(o);
    if (o.rank < 1) throw InvalidInput("--rank >= 1 is required");
    if (o.c1.empty()) throw InvalidInput("--c1 is required");
    NefProblem p(v, o.rank, parse_pic(v, o.c1));
    if (!o.c2.empty()) p.higher_chern = parse_ints(o.c2);
    if (o.big) p.big = true;
    p.check();
    return p;
}

Json cmd_homtable(const Opts& o, bool& ok) {
    Variety v = need_variety(o);
    auto c = standard_collection(v);
    if (!o.twist.empty()) c = twist_collection(c, parse_pic(v, o.twist));
    Json j = to_json(c);
    auto rep = validate_strong_exceptional(c);
    j["strong_exceptional"] = to_json(rep);
    ok = rep.ok;
    return j;
}

Json cmd_resolve(const Opts& o, bool& ok) {
    Variety v = need_variety(o);
    auto coll = standard_collection(v);
    std::optional<PicClass> dmin;
    if (!o.dmin.empty()) dmin = parse_pic(v, o.dmin);
    if (o.e0.empty()) {
        NefProblem p = need_problem(o);
        if (o.two_step) {
            auto r = solve_two_step(p, o.two_step);
            ok = r.status == SolveStatus::Determined;
            return to_json(r);
        }
        if (!dmin) throw InvalidInput("--dmin is required for the exponent solver");
        std::map<std::string, Int> params;
        if (o.e) params["e"] = *o.e;
        auto r = solve_exponent_system(p, *dmin, params);
        ok = r.status != SolveStatus::Infeasible;
        Json j = to_json(r);
        if (auto t = r.numeric()) j["staircase_violations"] = staircase_violations(*t);
        return j;
    }
    auto e0 = parse_ints(o.e0);
    auto t = resolution_exponents(coll, e0, dmin);
    if (o.reduce) t = reduce_no_trivial_quotient(t);
    auto terms = terms_from_table(coll, t);
    if (dmin) terms = twist_terms(terms, -*dmin);
    Json j = {{"table", to_json(t)},
              {"terms", to_json(normalize_terms(terms))},
              {"staircase_violations", staircase_violations(t)}};
    if (o.rank >= 1 && !o.c1.empty()) {
        NefProblem p = need_problem(o);
        ChernData target = dmin ? twist_chern(v, p.chern(), *dmin) : p.chern();
        auto rep = verify_resolution(coll, t, target);
        j["checks"] = checks_json(rep);
        ok = rep.ok();
    }
    return j;
}

Json cmd_bounds(const Opts& o, bool&) {
    NefProblem p = need_problem(o);
    Json j = {{"bounds", to_json(dmin_bounds(p))}};
    auto big = p.bigness();
    j["big"] = big ? Json(*big) : Json(nullptr);
    if (static_cast<int>(p.higher_chern.size()) >= p.variety.dim() - 1) j["segre"] = segre_top(p.variety, p.chern());
    if (!o.dmin.empty()) {
        PicClass d = parse_pic(p.variety, o.dmin);
        j["mask"] = vanishing_mask(p, d);
        j["mask_no_map_from_det"] = vanishing_mask(p, d, {true});
    }
    if (o.e) j["section_bound"] = to_json(section_bound_inequality(p, *o.e));
    return j;
}

Json cmd_classify(const Opts& o, bool&) {
    if (!o.facts.empty()) {
        FactSet f = FactSet::parse(o.facts);
        if (!o.variety.empty()) f.variety = Variety::parse(o.variety);
        if (!o.c1.empty() && f.variety) f.d = parse_pic(*f.variety, o.c1).degree();
        if (o.rank >= 1) f.r = o.rank;
        if (!o.dmin.empty()) f.dmin = parse_ints(o.dmin)[0];
        Json a = Json::array();
        for (const auto& c : apply_decision_rules(f)) a.push_back(to_json(c));
        return {{"conclusions", a}, {"facts", o.facts}};
    }
    NefProblem p = need_problem(o);
    Json a = Json::array();
    for (const auto& c : classify(p)) a.push_back(to_json(c));
    return {{"variety", p.variety.name()}, {"r", p.rank}, {"c1", to_json(p.c1)}, {"family", family_name(family_for(p))},
            {"count", a.size()}, {"cases", a}};
}

Json cmd_verify(const Opts& o, bool& ok) {
    if (o.all) {
        auto rep = verify_case_tables();
        ok = rep.ok();
        return to_json(rep);
    }
    if (!o.case_name.empty()) {
        Variety v = need_variety(o);
        auto c = instantiate(find_case(o.case_name), v, o.rank);
        if (!c) throw InvalidInput("case " + o.case_name + " does not apply to " + v.name() + " at r = " + std::to_string(o.rank));
        Json j = to_json(*c);
        Json perturbed = Json::array();
        for (const auto& pt : perturbations(*c))
            perturbed.push_back({{"term", pt.term}, {"delta", pt.delta}, {"detected", !verify_terms(v, pt.terms, c->target).ok()}});
        j["perturbations"] = perturbed;
        ok = j["ok"].get<bool>() && std::all_of(perturbed.begin(), perturbed.end(), [](const Json& x) { return x["detected"].get<bool>(); });
        return j;
    }
    if (!o.table.empty()) {
        NefProblem p = need_problem(o);
        std::ifstream in(o.table);
        if (!in) throw InvalidInput("cannot read " + o.table);
        Json raw;
        try {
            raw = Json::parse(in);
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("bad table JSON: ") + e.what());
        }
        ExponentTable t = table_from_json(raw);
        if (!o.dmin.empty()) t.dmin = parse_pic(p.variety, o.dmin);
        auto coll = standard_collection(p.variety);
        if (t.m() != coll.m()) throw InvalidInput("table size does not match the collection on " + p.variety.name());
        ChernData target = t.dmin ? twist_chern(p.variety, p.chern(), *t.dmin) : p.chern();
        auto rep = verify_resolution(coll, t, target);
        ok = rep.ok();
        return {{"table", to_json(t)}, {"checks", checks_json(rep)}, {"ok", rep.ok()},
                {"staircase_violations", staircase_violations(t)}};
    }
    throw InvalidInput("verify needs --all, --case or --table");
}

Json cmd_cohomology(const Opts& o, bool&) {
    Variety v = need_variety(o);
    if (o.twist.empty()) throw InvalidInput("--twist is required");
    Flavor f = parse_flavor(o.flavor);
    BundleSym b = f == Flavor::Line ? BundleSym::line(parse_pic(v, o.twist)) : BundleSym::spinor(f, parse_ints(o.twist)[0]);
    b.check(v);
    auto h = ext_dims(v, BundleSym::line(PicClass::zero(v)), b);
    if (!h) throw Unverifiable("cohomology of " + b.str() + " on " + v.name() + " is outside the trusted range");
    return {{"variety", v.name()}, {"bundle", to_json(b)}, {"h", *h}, {"chi", euler_characteristic(*h)}};
}

}  // namespace

void render(const Json& j, OutputFormat f, std::ostream& out) {
    switch (f) {
        case OutputFormat::Json: out << j.dump(2) << '\n'; break;
        case OutputFormat::Tsv: tsv(j, "", out); break;
        case OutputFormat::Pretty: pretty(j, 0, out); break;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Standard resolutions and nef bundle tables on P^n and Q^n", "nefres"};
    app.require_subcommand(1);
    Opts o;
    auto common = [&](CLI::App* s) {
        s->add_option("--variety", o.variety, "P<n> or Q<n>");
        s->add_option("--output", o.output, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    };
    auto problem = [&](CLI::App* s) {
        s->add_option("--rank", o.rank, "rank r");
        s->add_option("--c1", o.c1, "first Chern class, a,b on Q2");
        s->add_option("--c2", o.c2, "higher Chern classes c2[,c3,...]");
        s->add_flag("--big", o.big, "H(E) is big");
    };
    std::map<std::string, Json (*)(const Opts&, bool&)> handlers = {
        {"homtable", cmd_homtable}, {"resolve", cmd_resolve}, {"bounds", cmd_bounds},
        {"classify", cmd_classify}, {"verify", cmd_verify},   {"cohomology", cmd_cohomology}};

    auto* homtable = app.add_subcommand("homtable", "hom-dimension matrix of the standard collection");
    common(homtable);
    homtable->add_option("--twist", o.twist, "twist every member by O(t)");

    auto* resolve = app.add_subcommand("resolve", "exponent table from e0, or solve the exponent system");
    common(resolve);
    problem(resolve);
    resolve->add_option("--e0", o.e0, "row-0 exponents e00,e01,...");
    resolve->add_option("--dmin", o.dmin, "twist dmin");
    resolve->add_option("--e", o.e, "dim Hom(O,E)");
    resolve->add_flag("--reduce", o.reduce, "drop trivial quotients");
    resolve->add_option("--two-step", o.two_step, "solve the two-step system with the O(-1) correction in this degree")
        ->check(CLI::Range(1, 2));

    auto* bounds = app.add_subcommand("bounds", "dmin bounds, vanishing masks and the section bound");
    common(bounds);
    problem(bounds);
    bounds->add_option("--dmin", o.dmin, "twist dmin for the vanishing mask");
    bounds->add_option("--e", o.e, "dim Hom(O,E) for the section bound");

    auto* cls = app.add_subcommand("classify", "list the cases for (variety, rank, c1), or apply decision rules");
    common(cls);
    problem(cls);
    cls->add_option("--fact", o.facts, "a fact such as hom(O(d),E)=0");
    cls->add_option("--dmin", o.dmin, "dmin, for decision rules");

    auto* verify = app.add_subcommand("verify", "check cases, a single case, or a user table");
    common(verify);
    problem(verify);
    verify->add_flag("--all", o.all, "the full case and solver grid");
    verify->add_option("--case", o.case_name, "one case by name");
    verify->add_option("--table", o.table, "JSON exponent table to verify");
    verify->add_option("--dmin", o.dmin, "dmin of the table");

    auto* coh = app.add_subcommand("cohomology", "cohomology of a line or spinor bundle");
    common(coh);
    coh->add_option("--twist", o.twist, "twist t");
    coh->add_option("--flavor", o.flavor, "line, spinor, spinor+ or spinor-");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    OutputFormat fmt = o.output == "tsv" ? OutputFormat::Tsv : o.output == "pretty" ? OutputFormat::Pretty : OutputFormat::Json;
    for (auto* sub : app.get_subcommands()) {
        try {
            bool ok = true;
            Json j = handlers.at(sub->get_name())(o, ok);
            render(j, fmt, out);
            return ok ? 0 : 1;
        } catch (const InvalidInput& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        } catch (const NotClassified& e) {
            err << "not classified: " << e.what() << '\n';
            return 2;
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return 2;
}

}  // namespace nefres

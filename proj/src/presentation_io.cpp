#include "hopf/presentation_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "hopf/parse.hpp"
#include "hopf/render.hpp"

namespace hopf {

using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FieldDesc parse_field(const ordered_json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldDesc{};
    if (j.is_object() && j.contains("quad")) return FieldDesc{j.at("quad").get<long>()};
    throw Error("field must be \"Q\" or {\"quad\": d}");
}

// parses a word string against a half-built generator list
Word parse_word_against(const std::string& src, const std::vector<HopfGenerator>& gens,
                        const FieldDesc& field) {
    HopfPresentation tmp("tmp", gens, RewriteSystem({}, WordOrder::default_for(gens.size())),
                         field);
    return parse_word(src, tmp);
}

}  // namespace

HopfPresentation load_presentation_json(const std::string& text, const std::string& name) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("presentation file is not valid JSON: ") + e.what());
    }

    const FieldDesc field = parse_field(j.at("field"));

    std::vector<HopfGenerator> gens;
    for (const auto& g : j.at("generators")) {
        HopfGenerator hg;
        hg.name = g.at("name").get<std::string>();
        const std::string kind = g.at("kind").get<std::string>();
        if (kind == "grouplike") {
            hg.kind = GenKind::group_like;
            hg.invertible = true;
        } else if (kind == "skewprimitive") {
            hg.kind = GenKind::skew_primitive;
            hg.invertible = false;
        } else {
            throw Error("generator kind must be grouplike or skewprimitive");
        }
        gens.push_back(std::move(hg));
    }
    // pair words may mention any generator, so resolve them in a second pass
    std::size_t gi = 0;
    for (const auto& g : j.at("generators")) {
        if (gens[gi].kind == GenKind::skew_primitive)
            gens[gi].pair = g.contains("pair")
                                ? parse_word_against(g.at("pair").get<std::string>(), gens, field)
                                : Word::one();
        ++gi;
    }

    std::vector<int> rank(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) rank[i] = static_cast<int>(i);
    if (j.contains("precedence")) {
        const auto& prec = j.at("precedence");
        if (prec.size() != gens.size()) throw Error("precedence must list every generator");
        for (std::size_t pos = 0; pos < prec.size(); ++pos) {
            const std::string n = prec[pos].get<std::string>();
            bool found = false;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].name == n) {
                    rank[i] = static_cast<int>(pos);
                    found = true;
                }
            if (!found) throw Error("precedence names unknown generator " + n);
        }
    }
    std::vector<long> weight(gens.size(), 1);
    if (j.contains("weights")) {
        for (const auto& [n, w] : j.at("weights").items()) {
            bool found = false;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].name == n) {
                    weight[i] = w.get<long>();
                    found = true;
                }
            if (!found) throw Error("weights name unknown generator " + n);
        }
    }
    WordOrder order(std::move(rank), std::move(weight));

    // rules parse against a rule-free copy of the presentation
    HopfPresentation proto("proto", gens, RewriteSystem({}, order), field);
    std::vector<RewriteRule> rules;
    if (j.contains("rules")) {
        for (const auto& r : j.at("rules")) {
            RewriteRule rule;
            rule.lhs = parse_word(r.at("lhs").get<std::string>(), proto);
            rule.rhs = parse_element(r.at("rhs").get<std::string>(), proto);
            rules.push_back(std::move(rule));
        }
    }

    HopfPresentation H(name, std::move(gens), RewriteSystem(std::move(rules), order), field);
    const AxiomReport rep = hopf_axiom_report(H, 1, 0, 0, Exec::serial);
    if (!rep.pass())
        throw AxiomFailure("presentation fails Hopf structure checks: " +
                           rep.violations.front().detail);
    return H;
}

HopfPresentation load_presentation_file(const std::string& path) {
    return load_presentation_json(slurp(path), path);
}

std::string presentation_to_json(const HopfPresentation& H) {
    ordered_json j;
    if (H.field().is_rational())
        j["field"] = "Q";
    else
        j["field"] = {{"quad", H.field().quad_d}};
    j["generators"] = ordered_json::array();
    for (const auto& g : H.gens()) {
        ordered_json gj{{"name", g.name},
                        {"kind", g.kind == GenKind::group_like ? "grouplike" : "skewprimitive"}};
        if (g.kind == GenKind::skew_primitive) gj["pair"] = render_word(g.pair, H);
        j["generators"].push_back(gj);
    }
    j["rules"] = ordered_json::array();
    for (const auto& r : H.rw().rules())
        j["rules"].push_back({{"lhs", render_word(r.lhs, H)},
                              {"rhs", render_element(r.rhs, H)}});
    ordered_json prec = ordered_json::array();
    std::vector<std::pair<int, std::string>> order;
    for (std::size_t i = 0; i < H.gen_count(); ++i)
        order.emplace_back(H.order().rank()[i], H.gen(i).name);
    std::sort(order.begin(), order.end());
    for (const auto& [r, n] : order) prec.push_back(n);
    j["precedence"] = prec;
    ordered_json weights = ordered_json::object();
    for (std::size_t i = 0; i < H.gen_count(); ++i)
        if (H.order().weight()[i] != 1) weights[H.gen(i).name] = H.order().weight()[i];
    if (!weights.empty()) j["weights"] = weights;
    return j.dump(2);
}

LieAlgebra load_lie_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("Lie algebra file is not valid JSON: ") + e.what());
    }
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
        if (names.size() != dim) throw Error("names must match dim");
    } else {
        for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
    }
    std::vector<BracketEntry> brackets;
    for (const auto& b : j.at("brackets")) {
        if (!b.is_array() || b.size() != 3) throw Error("bracket entry must be [i, j, coeffs]");
        BracketEntry e;
        e.i = b[0].get<std::size_t>();
        e.j = b[1].get<std::size_t>();
        for (const auto& c : b[2]) {
            if (c.is_number_integer())
                e.coeffs.push_back(Scalar(c.get<long>()));
            else
                e.coeffs.push_back(parse_scalar(c.get<std::string>(), FieldDesc{}));
        }
        brackets.push_back(std::move(e));
    }
    return LieAlgebra(std::move(names), brackets);
}

LieAlgebra load_lie_file(const std::string& path) { return load_lie_json(slurp(path)); }

namespace {

// "key=value,key=value" tail of a selector
std::map<std::string, std::string> parse_args(const std::string& s) {
    std::map<std::string, std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t eq = s.find('=', i);
        if (eq == std::string::npos) throw Error("bad preset arguments: " + s);
        const std::size_t comma = s.find(',', eq);
        const std::string key = s.substr(i, eq - i);
        const std::string val =
            s.substr(eq + 1, (comma == std::string::npos ? s.size() : comma) - eq - 1);
        out[key] = val;
        i = comma == std::string::npos ? s.size() : comma + 1;
    }
    return out;
}

long arg_long(const std::map<std::string, std::string>& args, const std::string& key) {
    const auto it = args.find(key);
    if (it == args.end()) throw Error("preset missing argument " + key);
    return std::stol(it->second);
}

}  // namespace

HopfPresentation resolve_algebra(const std::string& selector) {
    const std::size_t colon = selector.find(':');
    const std::string head = selector.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : selector.substr(colon + 1);
    if (head == "F") return preset_F(arg_long(parse_args(tail), "t"));
    if (head == "A") {
        const auto args = parse_args(tail);
        const auto xi_it = args.find("xi");
        if (xi_it == args.end()) throw Error("preset A requires xi");
        // accept quadratic xi by probing the sqrt occurring in the string
        Scalar xi(0);
        const std::size_t sq = xi_it->second.find("sqrt(");
        if (sq == std::string::npos) {
            xi = parse_scalar(xi_it->second, FieldDesc{});
        } else {
            const std::size_t close = xi_it->second.find(')', sq);
            const long d = std::stol(xi_it->second.substr(sq + 5, close - sq - 5));
            xi = parse_scalar(xi_it->second, FieldDesc{d});
        }
        return preset_A(arg_long(args, "b"), xi);
    }
    if (head == "C") return preset_C(arg_long(parse_args(tail), "m"));
    if (head == "E") return preset_E(arg_long(parse_args(tail), "n"));
    if (head == "Zn") return preset_group_z(arg_long(parse_args(tail), "n"));
    if (head == "heis") return preset_heisenberg();
    if (head == "zxz2") return preset_z_cross_z2();
    if (head == "env") {
        if (tail.empty()) throw Error("env preset requires a Lie algebra file: env:<file>");
        if (tail == "sl2") return preset_env(LieAlgebra::sl2());
        if (tail == "heis") return preset_env(LieAlgebra::heisenberg());
        return preset_env(load_lie_file(tail));
    }
    return load_presentation_file(selector);
}

}  // namespace hopf

#include "tycat_cli/json_io.hpp"

#include <numeric>

#include "tycat/error.hpp"

namespace tycat::io {

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rat(const std::string& s) {
    try {
        auto p = s.find('/');
        if (p == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, p)), d(s.substr(p + 1));
        if (d == 0) throw InvalidArgument("zero denominator in " + s);
        return Rational(n) / Rational(d);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("not a rational number: '" + s + "'");
    }
}

namespace {

Rational rat_of(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<int64_t>());
    throw InvalidArgument("expected a rational (string or integer), got " + j.dump());
}

RootOfUnity root_of(const Rational& e) {
    Rational r = e - Rational(numerator(e) / denominator(e));
    if (r < 0) r += 1;
    return RootOfUnity(static_cast<int64_t>(numerator(r)), static_cast<int64_t>(denominator(r)));
}

const json& field(const json& j, const char* k) {
    if (!j.is_object() || !j.contains(k)) throw InvalidArgument(std::string("missing field '") + k + "'");
    return j.at(k);
}

const char* kind_name(Label::Kind k) {
    switch (k) {
        case Label::Kind::Pointed: return "pointed";
        case Label::Kind::TYPt: return "ty-pt";
        case Label::Kind::TYRho: return "ty-rho";
        case Label::Kind::TYSigma: return "ty-sigma";
        case Label::Kind::MPUnit: return "mp-unit";
        case Label::Kind::MPAlpha: return "mp-alpha";
        case Label::Kind::MPRho: return "mp-rho";
        case Label::Kind::MPSigma: return "mp-sigma";
        case Label::Kind::Product: return "product";
    }
    return "?";
}

}  // namespace

json to_json(const FinAbGroup& G) { return json{{"invariant_factors", G.factors()}}; }

FinAbGroup group_from_json(const json& j) {
    const json& f = j.is_array() ? j : field(j, "invariant_factors");
    return FinAbGroup(f.get<std::vector<int64_t>>());
}

json to_json(const CycNum& x) {
    json c = json::array();
    for (const auto& r : x.coeffs()) c.push_back(rat_str(r));
    auto z = x.to_complex();
    return json{{"conductor", x.conductor()}, {"coeffs", c}, {"approx", {z.real(), z.imag()}}};
}

CycNum cyc_from_json(const json& j) {
    int64_t N = field(j, "conductor").get<int64_t>();
    std::vector<Rational> c;
    for (const auto& x : field(j, "coeffs")) c.push_back(rat_of(x));
    return CycNum::from_coeffs(N, c);
}

json to_json(const QuadForm& q) {
    json v = json::array();
    for (const auto& x : q.values()) v.push_back(rat_str(x.exponent()));
    return json{{"group", to_json(q.group())}, {"values", v}};
}

QuadForm qform_from_json(const json& j) {
    FinAbGroup G = group_from_json(field(j, "group"));
    std::vector<RootOfUnity> v;
    for (const auto& x : field(j, "values")) v.push_back(root_of(rat_of(x)));
    if (static_cast<int64_t>(v.size()) != G.order()) throw InvalidArgument("qform needs one value per group element");
    return QuadForm(G, v);
}

json to_json(const Bichar& b) {
    json m = json::array();
    for (const auto& row : b.generator_values()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rat_str(x.exponent()));
        m.push_back(r);
    }
    return json{{"group", to_json(b.group())}, {"generators", m}};
}

Bichar bichar_from_json(const FinAbGroup& G, const json& j) {
    const json& m = j.is_array() ? j : field(j, "generators");
    std::vector<std::vector<RootOfUnity>> B;
    for (const auto& row : m) {
        std::vector<RootOfUnity> r;
        for (const auto& x : row) r.push_back(root_of(rat_of(x)));
        B.push_back(r);
    }
    return Bichar(G, B);
}

json to_json(const Label& l) {
    json j{{"kind", kind_name(l.kind)}, {"name", l.str()}};
    if (!l.g.empty()) j["g"] = l.g;
    if (!l.h.empty()) j["h"] = l.h;
    if (l.kind == Label::Kind::TYPt || l.kind == Label::Kind::TYRho || l.kind == Label::Kind::MPRho) j["i"] = l.i;
    if (l.kind == Label::Kind::Product) j["parts"] = {to_json(l.parts.at(0)), to_json(l.parts.at(1))};
    return j;
}

Label label_from_json(const json& j) {
    std::string k = field(j, "kind").get<std::string>();
    Label l;
    bool found = false;
    for (auto kind : {Label::Kind::Pointed, Label::Kind::TYPt, Label::Kind::TYRho, Label::Kind::TYSigma,
                      Label::Kind::MPUnit, Label::Kind::MPAlpha, Label::Kind::MPRho, Label::Kind::MPSigma,
                      Label::Kind::Product})
        if (k == kind_name(kind)) {
            l.kind = kind;
            found = true;
        }
    if (!found) throw InvalidArgument("unknown label kind " + k);
    if (j.contains("g")) l.g = j.at("g").get<Elem>();
    if (j.contains("h")) l.h = j.at("h").get<Elem>();
    if (j.contains("i")) l.i = j.at("i").get<int>();
    if (l.kind == Label::Kind::Product) {
        const auto& p = field(j, "parts");
        if (!p.is_array() || p.size() != 2) throw InvalidArgument("product label needs two parts");
        l.parts = {label_from_json(p[0]), label_from_json(p[1])};
    }
    return l;
}

json to_json(const ModularData& md) {
    json labels = json::array(), S = json::array(), T = json::array(), fS = json::array(), fT = json::array();
    size_t r = md.rank();
    for (const auto& l : md.labels) labels.push_back(to_json(l));
    for (size_t i = 0; i < r; ++i) {
        json row = json::array(), frow = json::array();
        for (size_t j = 0; j < r; ++j) {
            row.push_back(to_json(md.S(i, j)));
            auto z = md.S(i, j).to_complex();
            frow.push_back({z.real(), z.imag()});
        }
        S.push_back(row);
        fS.push_back(frow);
    }
    for (const auto& t : md.T) {
        T.push_back(to_json(t));
        auto z = t.to_complex();
        fT.push_back({z.real(), z.imag()});
    }
    json j{{"labels", labels},
           {"S_conductor", md.S.conductor()},
           {"S", S},
           {"T", T},
           {"c_top", rat_str(md.c_top)},
           {"grading", md.grading ? json(*md.grading) : json(nullptr)},
           {"float_view", {{"S", fS}, {"T", fT}}}};
    return j;
}

ModularData md_from_json(const json& j) {
    ModularData md;
    for (const auto& l : field(j, "labels")) md.labels.push_back(label_from_json(l));
    size_t r = md.labels.size();
    const auto& S = field(j, "S");
    if (!S.is_array() || S.size() != r) throw InvalidArgument("S must be a square array matching the labels");
    std::vector<CycNum> entries;
    int64_t K = j.contains("S_conductor") ? j.at("S_conductor").get<int64_t>() : 1;
    for (const auto& row : S) {
        if (!row.is_array() || row.size() != r) throw InvalidArgument("S must be a square array matching the labels");
        for (const auto& x : row) {
            entries.push_back(cyc_from_json(x));
            K = std::lcm(K, entries.back().conductor());
        }
    }
    md.S = CycMatrix(r, K);
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < r; ++k) md.S.set(i, k, entries[i * r + k]);
    const auto& T = field(j, "T");
    if (!T.is_array() || T.size() != r) throw InvalidArgument("T must have one entry per label");
    for (const auto& x : T) md.T.push_back(cyc_from_json(x));
    md.c_top = mod8(rat_of(field(j, "c_top")));
    if (j.contains("grading") && !j.at("grading").is_null()) md.grading = j.at("grading").get<std::vector<int>>();
    return md;
}

json to_json(const FusionRing& R) {
    json N = json::array();
    size_t r = R.rank();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k)
                if (R(i, j, k) != 0) N.push_back({i, j, k, R(i, j, k)});
    return json{{"labels", R.labels}, {"dual", R.dual}, {"N", N}};
}

json to_json(const FusionReport& rep) {
    json j{{"ok", rep.ok()},
           {"unit", rep.unit_ok},
           {"associative", rep.associative},
           {"frobenius", rep.frobenius_ok},
           {"dual", rep.dual_ok},
           {"fp_dims", rep.fp_dims},
           {"global_fp_dim", rep.global_fp_dim},
           {"failures", rep.failures}};
    j["global_dim_exact"] = rep.global_dim_exact ? json(*rep.global_dim_exact) : json(nullptr);
    return j;
}

json to_json(const Hypergroup& h) {
    json L = json::array();
    size_t r = h.rank();
    for (size_t k = 0; k < r; ++k)
        for (size_t l = 0; l < r; ++l)
            for (size_t n = 0; n < r; ++n)
                if (h(k, l, n) != 0) L.push_back({k, l, n, rat_str(h(k, l, n))});
    return json{{"elements", h.elements}, {"star", h.star}, {"lambda", L}};
}

json to_json(const CharTable& t) {
    json E = json::array(), F = json::array(), W = json::array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        json row = json::array(), frow = json::array();
        for (size_t j = 0; j < t.cols.size(); ++j) {
            row.push_back(to_json(t(i, j)));
            auto z = t(i, j).to_complex();
            frow.push_back({z.real(), z.imag()});
        }
        E.push_back(row);
        F.push_back(frow);
    }
    for (const auto& w : t.weights) W.push_back(rat_str(w));
    return json{{"rows", t.rows}, {"cols", t.cols}, {"weights", W}, {"entries", E}, {"float_view", F}};
}

json to_json(const BipartiteGraph& g) {
    json E = json::array();
    for (const auto& [a, b] : g.edges) E.push_back({a, b});
    return json{{"even", g.even}, {"odd", g.odd}, {"edges", E}, {"star", g.star}};
}

}  // namespace tycat::io

#include "tycat_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tycat/error.hpp"
#include "tycat/graphs.hpp"
#include "tycat/lattice.hpp"
#include "tycat/moddata.hpp"
#include "tycat_cli/json_io.hpp"

namespace tycat::cli {

namespace {

using io::json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int64_t> parse_ints(const std::string& s) {
    std::vector<int64_t> v;
    for (const auto& t : split(s, ',')) {
        try {
            size_t pos = 0;
            v.push_back(std::stoll(t, &pos));
            if (pos != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer: '" + t + "'");
        }
    }
    return v;
}

FinAbGroup parse_group(const std::string& s) {
    auto orders = parse_ints(s);
    for (auto d : orders)
        if (d < 1) throw InvalidArgument("cyclic orders must be positive");
    orders.erase(std::remove(orders.begin(), orders.end(), 1), orders.end());
    if (orders.empty()) return FinAbGroup();
    return group_from_cyclic(orders).target;
}

json load_json(const std::string& arg) {
    try {
        if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
        std::ifstream f(arg);
        if (!f) throw InvalidArgument("cannot open " + arg);
        return json::parse(f);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

EvenLattice parse_lattice(const std::string& spec) {
    if (spec.find(".json") != std::string::npos || (!spec.empty() && spec[0] == '{')) {
        json j = load_json(spec);
        const auto& g = j.contains("gram") ? j.at("gram") : j;
        std::vector<std::vector<int64_t>> rows;
        for (const auto& r : g) {
            std::vector<int64_t> row;
            for (const auto& x : r) row.push_back(x.get<int64_t>());
            rows.push_back(row);
        }
        return EvenLattice(IntMatrix::from_rows(rows));
    }
    EvenLattice L;
    bool first = true;
    for (const auto& part : split(spec, '+')) {
        EvenLattice M = named_lattice(part);
        L = first ? M : orthogonal_sum(L, M);
        first = false;
    }
    if (first) throw InvalidArgument("empty lattice specification");
    return L;
}

Rational sign_of(const std::string& s) {
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw InvalidArgument("sign must be + or -");
}

MetricGroup default_metric(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw Unsupported("default forms are only defined for |G| odd");
    return classify_metric_groups(G).front();
}

QuadForm parse_qform(const FinAbGroup& G, const std::string& s) {
    if (s == "default") return default_metric(G).q;
    if (!s.empty() && (s[0] == '{' || s.find(".json") != std::string::npos)) {
        QuadForm q = io::qform_from_json(load_json(s));
        if (!(q.group() == G)) throw InvalidArgument("qform group does not match --group");
        return q;
    }
    json vals = json::array();
    for (const auto& t : split(s, ',')) vals.push_back(t);
    return io::qform_from_json(json{{"group", io::to_json(G)}, {"values", vals}});
}

Bichar parse_bichar(const FinAbGroup& G, const std::string& s) {
    if (s == "default") {
        auto m = default_metric(G);
        return *m.b;
    }
    if (!s.empty() && (s[0] == '{' || s[0] == '[' || s.find(".json") != std::string::npos))
        return io::bichar_from_json(G, load_json(s));
    json m = json::array();
    for (const auto& row : split(s, ';')) {
        json r = json::array();
        for (const auto& t : split(row, ',')) r.push_back(t);
        m.push_back(r);
    }
    return io::bichar_from_json(G, m);
}

size_t resolve_label(const ModularData& md, const std::string& s) {
    for (size_t i = 0; i < md.rank(); ++i)
        if (md.labels[i].str() == s) return i;
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size() && v >= 0 && static_cast<size_t>(v) < md.rank()) return static_cast<size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("unknown label " + s);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tycat: modular data, fusion rules and lattices for Tambara-Yamagami categories"};
    app.require_subcommand(1);

    std::string lattice, isotropic, group, qform = "default", bichar = "default", sign = "+", from_md, rules, md_file,
                label, a_file, b_file, parent, child, bosons;
    size_t max_rank = 0;
    bool dot = false, table = false;

    auto* disc = app.add_subcommand("disc", "discriminant form of an even lattice");
    disc->add_option("--lattice", lattice, "name (A2, E8, A2+E6) or gram.json")->required();

    auto* gl = app.add_subcommand("glue", "overlattice from an isotropic subgroup");
    gl->add_option("--lattice", lattice)->required();
    gl->add_option("--isotropic", isotropic, "generators as 'x1,x2;y1,y2' in discriminant coordinates")->required();

    auto* cls = app.add_subcommand("classify", "metric classes and MP classes on a group");
    cls->add_option("--group", group)->required();

    auto* md = app.add_subcommand("md", "modular data");
    md->require_subcommand(1);
    auto add_md_opts = [&](CLI::App* s, bool has_sign) {
        s->add_option("--group", group)->required();
        s->add_option("--qform", qform, "default | comma-separated exponents | JSON");
        s->add_option("--bichar", bichar, "default | 'a,b;c,d' generator exponents | JSON");
        if (has_sign) s->add_option("--sign", sign, "+ or -");
    };
    auto* md_pt = md->add_subcommand("pointed");
    add_md_opts(md_pt, false);
    auto* md_ty = md->add_subcommand("ty-center");
    add_md_opts(md_ty, true);
    auto* md_mp = md->add_subcommand("mp");
    add_md_opts(md_mp, true);

    auto* fus = app.add_subcommand("fusion", "fusion ring and its check report");
    auto* fus_md = fus->add_option("--from-md", from_md);
    auto* fus_rules = fus->add_option("--rules", rules)->check(CLI::IsMember({"ty", "genty", "genmp"}));
    fus->add_option("--group", group);
    fus_md->excludes(fus_rules);

    auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicator");
    fs->add_option("--md", md_file)->required();
    fs->add_option("--label", label)->required();

    auto* eq = app.add_subcommand("equiv", "modular data equivalence");
    eq->add_option("--a", a_file)->required();
    eq->add_option("--b", b_file)->required();
    eq->add_option("--max-rank", max_rank);

    auto* cd = app.add_subcommand("condense", "branching certificate for a condensation");
    cd->add_option("--parent", parent)->required();
    cd->add_option("--child", child)->required();
    cd->add_option("--bosons", bosons, "labels or indices separated by ';'")->required();

    auto* gr = app.add_subcommand("graph", "principal graphs");
    gr->require_subcommand(1);
    auto* gr_p = gr->add_subcommand("lr-principal");
    auto* gr_d = gr->add_subcommand("lr-dual");
    for (auto* s : {gr_p, gr_d}) {
        s->add_option("--group", group)->required();
        s->add_flag("--dot", dot);
    }

    auto* hy = app.add_subcommand("hypergroup", "TY hypergroup and character table");
    hy->add_option("--group", group)->required();
    hy->add_flag("--table", table);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*disc) {
            auto L = parse_lattice(lattice);
            auto D = discriminant_form(L);
            json q = json::array();
            for (const auto& v : D.q.values()) q.push_back(io::rat_str(v.exponent()));
            emit(out, json{{"lattice", lattice},
                           {"rank", L.rank()},
                           {"det", L.det().str()},
                           {"group", D.group.factors()},
                           {"qform", q},
                           {"c_top", io::rat_str(gauss_central_charge(D.q))}});
        } else if (*gl) {
            auto L = parse_lattice(lattice);
            std::vector<Elem> gens;
            for (const auto& g : split(isotropic, ';')) gens.push_back(parse_ints(g));
            auto M = glue(L, gens);
            json gram = json::array();
            for (size_t i = 0; i < M.rank(); ++i) {
                json row = json::array();
                for (size_t j = 0; j < M.rank(); ++j) row.push_back(static_cast<int64_t>(M.gram()(i, j)));
                gram.push_back(row);
            }
            json j{{"rank", M.rank()}, {"det", M.det().str()}, {"even", true}, {"gram", gram}};
            try {
                j["roots"] = count_roots(M);
            } catch (const CapacityError& e) {
                j["roots"] = nullptr;
                err << "root count skipped: " << e.what() << "\n";
            }
            emit(out, j);
        } else if (*cls) {
            auto G = parse_group(group);
            auto classes = classify_metric_groups(G);
            auto mp = classify_mp(G);
            emit(out, json{{"group", G.factors()},
                           {"metric_classes", classes.size()},
                           {"mp_classes", mp.size()},
                           {"mp_rank", mp.empty() ? 0 : mp.front().rank()}});
        } else if (*md) {
            auto G = parse_group(group);
            ModularData m;
            if (*md_pt) {
                QuadForm q = (qform == "default" && bichar != "default") ? qform_from_bichar(parse_bichar(G, bichar))
                                                                         : parse_qform(G, qform);
                m = pointed_md(q);
            } else {
                Bichar b = (bichar == "default" && qform != "default") ? bichar_from_qform(parse_qform(G, qform))
                                                                       : parse_bichar(G, bichar);
                int s = sign_of(sign) > 0 ? 1 : -1;
                m = *md_ty ? ty_center_md(b, s) : mp_md(b, s);
            }
            emit(out, io::to_json(m));
        } else if (*fus) {
            FusionRing R;
            if (!from_md.empty()) {
                R = verlinde_fusion(io::md_from_json(load_json(from_md)));
            } else if (!rules.empty()) {
                if (group.empty()) throw InvalidArgument("--rules needs --group");
                auto G = parse_group(group);
                R = rules == "ty" ? ty_fusion_ring(G) : rules == "genty" ? gen_ty_fusion_ring(G) : gen_mp_fusion_ring(G);
            } else {
                err << "usage error: fusion needs --from-md or --rules\n";
                return 2;
            }
            emit(out, json{{"ring", io::to_json(R)}, {"report", io::to_json(check_fusion_ring(R))}});
        } else if (*fs) {
            auto m = io::md_from_json(load_json(md_file));
            size_t l = resolve_label(m, label);
            emit(out, json{{"label", m.labels[l].str()}, {"nu", bantay_fs(m, l)}});
        } else if (*eq) {
            auto a = io::md_from_json(load_json(a_file));
            auto b = io::md_from_json(load_json(b_file));
            auto w = md_equivalent(a, b, max_rank);
            if (!w) {
                emit(out, json{{"witness", "none"}});
            } else {
                json perm = json::array();
                for (size_t i = 0; i < w->perm.size(); ++i) perm.push_back({a.labels[i].str(), b.labels[w->perm[i]].str()});
                emit(out, json{{"witness", {{"perm", w->perm}, {"pairs", perm}, {"zeta_power", w->zeta_power}}}});
            }
        } else if (*cd) {
            auto P = io::md_from_json(load_json(parent));
            auto C = io::md_from_json(load_json(child));
            std::vector<size_t> bs;
            for (const auto& t : split(bosons, ';')) bs.push_back(resolve_label(P, t));
            auto B = verify_condensation(P, C, bs);
            if (!B) {
                emit(out, json{{"certificate", "none"}});
            } else {
                json M = json::array();
                for (size_t i = 0; i < B->rows; ++i) {
                    json row = json::array();
                    for (size_t j = 0; j < B->cols; ++j) row.push_back((*B)(i, j));
                    M.push_back(row);
                }
                emit(out, json{{"certificate", {{"B", M}, {"zeta_power", B->zeta_power}}}});
            }
        } else if (*gr) {
            auto G = parse_group(group);
            auto g = *gr_p ? lr_principal_graph(G) : lr_dual_principal_graph(G);
            if (dot)
                out << emit_dot(g);
            else
                emit(out, io::to_json(g));
        } else if (*hy) {
            auto G = parse_group(group);
            auto d = ty_dual_hypergroup_and_table(G);
            json j{{"hypergroup", io::to_json(d.primal)}, {"report", check_hypergroup(d.primal).ok()}};
            if (table) {
                j["dual"] = io::to_json(d.dual);
                j["table"] = io::to_json(d.table);
                j["table_ok"] = check_char_table(d).ok();
            }
            emit(out, j);
        }
    } catch (const Error& e) {
        emit(out, json{{"error", e.kind()}, {"message", e.what()}});
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        emit(out, json{{"error", "invalid-argument"}, {"message", e.what()}});
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace tycat::cli

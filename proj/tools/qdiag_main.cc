// Copyright 2026 The qdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiag/census.h"
#include "qdiag/channels.h"
#include "qdiag/dsl.h"
#include "qdiag/duality.h"
#include "qdiag/linalg.h"
#include "qdiag/planner.h"
#include "qdiag/protocols.h"

using json = nlohmann::ordered_json;
using namespace qdiag;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string file;
    std::string obj;
    std::string plan = "greedy";
    std::string resource;
    std::string input;
    std::string variant = "alice";
    std::vector<std::size_t> f_legs;
    double tol = kDefaultRankTol;
    std::size_t d_a = 2;
    std::size_t d_e = 2;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    bool structured = false;
    bool verbose = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BuiltDiagram load(const std::string &path) {
    return build(parse(read_file(path)));
}

std::string leg_label(const Leg &l) {
    return l.space.label + (l.polarity == Polarity::open ? "+" : "-");
}

json tensor_json(const TensorObject &t) {
    json legs = json::array();
    for (const auto &l : t.legs()) {
        legs.push_back(leg_label(l));
    }
    json data = json::array();
    for (const auto &z : t.data()) {
        data.push_back({z.real(), z.imag()});
    }
    return {{"name", t.name()}, {"legs", legs}, {"dims", t.dims()}, {"data", data}};
}

json vector_json(const Eigen::VectorXd &v) {
    json out = json::array();
    for (double x : v) {
        out.push_back(x);
    }
    return out;
}

json outcome_json(const ProtocolOutcome &o) {
    json fid = json::array();
    for (const auto &f : o.fidelity) {
        fid.push_back(f ? json(*f) : json(nullptr));
    }
    return {{"q", o.q}, {"r", o.r}, {"p", o.p}, {"q0", o.q0}, {"p_s", o.p_s}, {"fidelity", fid}};
}

/// First object of a file, or the named one.
TensorObject first_object(const std::string &path) {
    auto b = load(path);
    if (b.diagram.objects().empty()) {
        throw std::invalid_argument("'" + path + "' declares no objects");
    }
    return b.diagram.objects().front();
}

json cmd_parse(const Options &o) {
    auto src = parse(read_file(o.file));
    json spaces = json::array(), objects = json::array(), edges = json::array();
    for (const auto &st : src.statements) {
        if (const auto *s = std::get_if<SpaceStmt>(&st)) {
            spaces.push_back({{"label", s->label}, {"dim", s->dim}, {"line", s->span.line}});
        } else if (const auto *ob = std::get_if<ObjectStmt>(&st)) {
            json legs = json::array();
            for (const auto &l : ob->legs) {
                legs.push_back(l.space + (l.polarity == Polarity::open ? "+" : "-"));
            }
            objects.push_back({{"name", ob->name}, {"legs", legs}, {"size", ob->data.size()}, {"line", ob->span.line}});
        } else if (const auto *e = std::get_if<EdgeStmt>(&st)) {
            edges.push_back(
                {{"open", {{"object", e->open.object}, {"leg", e->open.leg}}},
                 {"closed", {{"object", e->closed.object}, {"leg", e->closed.leg}}},
                 {"line", e->span.line}});
        }
    }
    return {{"spaces", spaces}, {"objects", objects}, {"edges", edges}};
}

json cmd_contract(const Options &o) {
    auto b = load(o.file);
    ContractionPlan p;
    if (o.plan == "greedy") {
        p = plan(b.diagram);
    } else if (o.plan == "decl") {
        p = plan_declaration(b.diagram);
    } else {
        throw std::invalid_argument("--plan must be greedy or decl");
    }
    auto result = contract_all(b.diagram, p.order);
    if (o.verbose) {
        std::cerr << "contracted " << b.diagram.edges().size() << " edges, cost " << p.cost << ", result has "
                  << result.num_legs() << " legs\n";
    }
    return {{"plan", {{"order", p.order}, {"cost", p.cost}}}, {"result", tensor_json(result.renamed("result"))}};
}

json cmd_schmidt(const Options &o) {
    auto psi = load(o.file).object(o.obj);
    auto sd = schmidt(psi, o.tol);
    if (o.verbose) {
        std::cerr << "Schmidt rank " << sd.rank << ", smallest coefficient " << sd.min_coefficient() << "\n";
    }
    return {
        {"object", o.obj},
        {"coefficients", vector_json(sd.coefficients)},
        {"rank", sd.rank},
        {"min_coefficient", sd.min_coefficient()},
        {"tol", o.tol}};
}

json cmd_invert(const Options &o) {
    auto psi = load(o.file).object(o.obj);
    auto inv = invert_ket(psi, o.tol);
    return {{"object", o.obj}, {"inverse", tensor_json(inv)}, {"tol", o.tol}};
}

/// Regroups an object's legs into an isometry (b+, f+, a-): f from --f-legs, b from the
/// remaining open legs, a from the closed legs.
Isometry isometry_from_legs(const TensorObject &t, const std::vector<std::size_t> &f_legs) {
    std::vector<std::size_t> b, f, a;
    std::vector<bool> is_f(t.num_legs(), false);
    for (auto k : f_legs) {
        if (k < 1 || k > t.num_legs()) {
            throw std::invalid_argument("--f-legs index out of range");
        }
        if (t.leg(k - 1).polarity != Polarity::open) {
            throw std::invalid_argument("--f-legs must name open legs");
        }
        is_f[k - 1] = true;
    }
    for (std::size_t k = 0; k < t.num_legs(); k++) {
        if (is_f[k]) {
            f.push_back(k);
        } else if (t.leg(k).polarity == Polarity::open) {
            b.push_back(k);
        } else {
            a.push_back(k);
        }
    }
    if (b.empty() || f.empty() || a.empty()) {
        throw std::invalid_argument("isometry needs open output legs, environment legs and closed input legs");
    }
    std::vector<std::size_t> perm = b;
    perm.insert(perm.end(), f.begin(), f.end());
    perm.insert(perm.end(), a.begin(), a.end());
    auto p = permute_legs(t, perm);
    auto group = [&](const std::vector<std::size_t> &legs, const char *label) {
        std::size_t dim = 1;
        for (auto k : legs) {
            dim *= t.leg(k).dim();
        }
        return Space{label, dim};
    };
    p = fuse_legs(p, 0, b.size(), group(b, "b"));
    p = fuse_legs(p, 1, f.size(), group(f, "f"));
    p = fuse_legs(p, 2, a.size(), group(a, "a"));
    return Isometry(p.renamed(t.name()));
}

json cmd_kraus_rank(const Options &o) {
    auto t = load(o.file).object(o.obj);
    Channel ch(isometry_from_legs(t, o.f_legs));
    auto cross = cross_operator_rank(ch.isometry(), o.tol);
    auto dyn = dynamical_rank(ch.dynamical(), o.tol);
    if (cross != dyn) {
        throw std::logic_error("Kraus rank disagreement between cross operator and dynamical operator");
    }
    if (o.verbose) {
        std::cerr << "Kraus rank " << cross << "\n";
    }
    return {{"object", o.obj}, {"kappa", cross}, {"cross_operator_rank", cross}, {"dynamical_rank", dyn}, {"tol", o.tol}};
}

json cmd_cp_check(const Options &o) {
    auto q = load(o.file).object(o.obj);
    auto v = is_completely_positive(q, o.tol);
    if (o.verbose) {
        std::cerr << (v.completely_positive ? "completely positive" : "not completely positive")
                  << ", min eigenvalue " << v.min_eigenvalue << "\n";
    }
    return {
        {"object", o.obj},
        {"completely_positive", v.completely_positive},
        {"min_eigenvalue", v.min_eigenvalue},
        {"tol", o.tol}};
}

json cmd_teleport(const Options &o) {
    auto psi = first_object(o.resource);
    auto c = first_object(o.input);
    if (c.num_legs() != 1) {
        throw std::invalid_argument("input must be a single-leg ket");
    }
    check_bipartite_ket(psi);
    auto basis = bell_basis(c.leg(0).space, psi.leg(0).space);
    auto us = standard_corrections(psi, basis);
    auto out = run_teleport(psi, basis, us, c);
    if (o.verbose) {
        std::cerr << "teleport: p_s = " << out.p_s << "\n";
    }
    return {{"protocol", "standard"}, {"outcome", outcome_json(out)}};
}

json cmd_unambiguous(const Options &o) {
    auto psi = first_object(o.resource);
    auto c = first_object(o.input);
    if (c.num_legs() != 1) {
        throw std::invalid_argument("input must be a single-leg ket");
    }
    check_bipartite_ket(psi);
    auto basis = bell_basis(c.leg(0).space, psi.leg(0).space);
    auto protocol = o.variant == "alice" ? build_povm_alice_concentrates(psi, basis)
                    : o.variant == "bob" ? build_bob_corrects(psi, basis)
                    : o.variant == "split"
                        ? build_split_concentration(psi, basis)
                        : throw std::invalid_argument("--variant must be alice, bob or split");
    auto out = run_unambiguous(protocol, c);
    double bound = success_bound(psi);
    if (o.verbose) {
        std::cerr << "unambiguous (" << o.variant << "): p_s = " << out.p_s << ", bound " << bound << "\n";
    }
    return {
        {"protocol", o.variant},
        {"outcome", outcome_json(out)},
        {"bound", bound},
        {"povm_trace_gap", povm_trace_gap(protocol)}};
}

json cmd_census(const Options &o) {
    CensusConfig cfg;
    cfg.d_a = o.d_a;
    cfg.d_e = o.d_e;
    cfg.n = o.samples;
    cfg.seed = o.seed;
    cfg.tol = o.tol;
    cfg.structured = o.structured;
    auto h = rank_census(cfg);
    if (o.verbose) {
        std::cerr << "census: " << h.total() << " unitaries, " << h.gap_violations << " gap violations\n";
        for (const auto &[rank, count] : h.counts) {
            std::cerr << "  rank " << rank << ": " << count << "\n";
        }
    }
    return json::parse(to_json(h));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Atemporal diagram engine: contraction, duality, channels and protocols"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--verbose,-v", o.verbose, "Print a summary to stderr");

    auto *parse_cmd = app.add_subcommand("parse", "Parse a diagram file and echo its structure");
    parse_cmd->add_option("file", o.file)->required();

    auto *contract = app.add_subcommand("contract", "Contract every edge of a diagram");
    contract->add_option("file", o.file)->required();
    contract->add_option("--plan", o.plan, "greedy or decl")->check(CLI::IsMember({"greedy", "decl"}));

    auto add_tol = [&](CLI::App *c) { c->add_option("--tol", o.tol, "Relative rank tolerance")->capture_default_str(); };

    auto *schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite ket");
    schmidt_cmd->add_option("file", o.file)->required();
    schmidt_cmd->add_option("--obj", o.obj)->required();
    add_tol(schmidt_cmd);

    auto *invert = app.add_subcommand("invert", "Inverse of an entangled ket");
    invert->add_option("file", o.file)->required();
    invert->add_option("--obj", o.obj)->required();
    add_tol(invert);

    auto *kraus = app.add_subcommand("kraus-rank", "Kraus rank of an isometry");
    kraus->add_option("file", o.file)->required();
    kraus->add_option("--obj", o.obj)->required();
    kraus->add_option("--f-legs", o.f_legs, "1-based environment legs")->required();
    add_tol(kraus);

    auto *cp = app.add_subcommand("cp-check", "Complete positivity of a transition operator");
    cp->add_option("file", o.file)->required();
    cp->add_option("--obj", o.obj)->required();
    add_tol(cp);

    auto *tele = app.add_subcommand("teleport", "Standard teleportation with a Bell-basis measurement");
    tele->add_option("--resource", o.resource)->required();
    tele->add_option("--input", o.input)->required();

    auto *unamb = app.add_subcommand("unambiguous", "Optimal unambiguous teleportation");
    unamb->add_option("--resource", o.resource)->required();
    unamb->add_option("--input", o.input)->required();
    unamb->add_option("--variant", o.variant)->check(CLI::IsMember({"alice", "bob", "split"}));

    auto *census = app.add_subcommand("census", "Cross-operator rank census of random unitaries");
    census->add_option("--da", o.d_a)->check(CLI::PositiveNumber);
    census->add_option("--de", o.d_e)->check(CLI::PositiveNumber);
    census->add_option("--samples", o.samples);
    census->add_option("--seed", o.seed);
    census->add_flag("--structured", o.structured);
    add_tol(census);

    for (auto *c : app.get_subcommands([](CLI::App *) { return true; })) {
        c->add_flag("--verbose,-v", o.verbose, "Print a summary to stderr");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json out;
        if (*parse_cmd) {
            out = cmd_parse(o);
        } else if (*contract) {
            out = cmd_contract(o);
        } else if (*schmidt_cmd) {
            out = cmd_schmidt(o);
        } else if (*invert) {
            out = cmd_invert(o);
        } else if (*kraus) {
            out = cmd_kraus_rank(o);
        } else if (*cp) {
            out = cmd_cp_check(o);
        } else if (*tele) {
            out = cmd_teleport(o);
        } else if (*unamb) {
            out = cmd_unambiguous(o);
        } else if (*census) {
            out = cmd_census(o);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const ParseError &e) {
        std::cout << json{{"error", "parse"}, {"category", to_string(e.kind())}, {"line", e.span().line},
                          {"column", e.span().column}, {"message", e.detail()}}
                         .dump(2)
                  << "\n";
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception &e) {
        std::cout << json{{"error", "domain"}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
}

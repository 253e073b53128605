#include "stablelattice/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stablelattice/bouquet.hpp"
#include "stablelattice/compression.hpp"
#include "stablelattice/core.hpp"
#include "stablelattice/errors.hpp"
#include "stablelattice/generate.hpp"
#include "stablelattice/robust.hpp"
#include "stablelattice/rotations.hpp"
#include "text_util.hpp"

namespace stablelattice::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    // Not rdbuf insertion: that sets failbit when the file is empty, and an
    // empty file is a legal input (an error list with no errors).
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("cannot read file: " + path);
    return text;
}

// Shortest round-trip decimal form, byte-stable across platforms.
std::string format_double(double x) {
    if (x == 0) x = 0;  // never print the sign of a negative zero
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void print_matching_line(std::ostream& out, const Instance& inst, const Matching& m) {
    out << format_matching(inst, m) << '\n';
}

// One rotation per line as "id: a1 b2 ...", then Hasse edges as "u -> v".
// Element ids 0 and 1 are the bottom/top dummies and never carry pairs.
void print_poset(std::ostream& out, const Instance& inst, const RotationPoset& poset) {
    int n = inst.n();
    for (int id = RotationPoset::first_rotation_id; id < poset.element_count(); ++id) {
        out << id << ':';
        for (auto [b, g] : poset.rotation(id).pairs)
            out << ' ' << format_agent(b, Side::boys, n) << format_agent(g, Side::girls, n);
        out << '\n';
    }
    for (auto [u, v] : poset.hasse_edges()) out << u << " -> " << v << '\n';
}

void print_meta(std::ostream& out, const MetaPoset& meta) {
    for (int b = 0; b < meta.block_count(); ++b) {
        out << "block " << b;
        if (b == meta.a_s()) out << " [s]";
        if (b == meta.a_t()) out << " [t]";
        out << ':';
        std::vector<int> members = meta.block(b);
        std::sort(members.begin(), members.end());
        for (int x : members) out << ' ' << x;
        out << '\n';
    }
    for (auto [u, v] : meta.dag_edges()) out << u << " -> " << v << '\n';
}

// Edge list file: one "tail head" pair of poset element ids per line; blank
// lines and # comments are skipped.
EdgeSet parse_edge_list(std::string_view text, int element_count) {
    EdgeSet out;
    for (const std::string& line : detail::effective_lines(text)) {
        auto toks = detail::tokens_of(line);
        if (toks.size() != 2)
            throw ParseError("edge list: expected 'tail head' per line, got: " + line);
        int ids[2];
        for (int i = 0; i < 2; ++i) {
            const std::string& tok = toks[i];
            if (tok.empty() || tok.size() > 9 ||
                !std::all_of(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("edge list: bad element id: '" + tok + "'");
            long v = std::stol(tok);
            if (v >= element_count)
                throw ParseError("edge list: element id out of range: '" + tok + "'");
            ids[i] = static_cast<int>(v);
        }
        out.edges.push_back(Edge{ids[0], ids[1]});
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    int rc = 0;
    CLI::App app{"Stable matching lattices: rotations, compressions, bouquets,\n"
                 "and fully robust matchings under preference-list errors."};
    app.name("stablelattice");
    app.require_subcommand(1);

    std::string instance_path;
    std::string errors_path;
    std::string weights_path;
    std::string edges_path;
    std::string side = "boys";
    bool minimize = false;
    bool trace = false;

    auto* solve = app.add_subcommand("solve", "Print one side's optimal stable matching");
    solve->add_option("--instance", instance_path, "Instance file")->required();
    solve->add_option("--side", side, "Proposing side: boys (default) or girls")
        ->check(CLI::IsMember({"boys", "girls"}));
    solve->callback([&] {
        Instance inst = load_instance(instance_path);
        Side proposing = side == "girls" ? Side::girls : Side::boys;
        print_matching_line(std::cout, inst, deferred_acceptance(inst, proposing));
    });

    auto* poset_cmd = app.add_subcommand("poset", "Print the rotation poset");
    poset_cmd->add_option("--instance", instance_path, "Instance file")->required();
    poset_cmd->callback([&] {
        Instance inst = load_instance(instance_path);
        print_poset(std::cout, inst, build_rotation_poset(inst));
    });

    auto* enumerate = app.add_subcommand("enumerate", "Print all stable matchings");
    enumerate->add_option("--instance", instance_path, "Instance file")->required();
    enumerate->callback([&] {
        Instance inst = load_instance(instance_path);
        RotationPoset poset = build_rotation_poset(inst);
        for (const ClosedSet& cs : enumerate_proper_closed_sets(poset))
            print_matching_line(std::cout, inst, matching_from_closed_set(poset, inst, cs));
    });

    auto* compress = app.add_subcommand(
        "compress", "Shrink the rotation poset by an edge list; print blocks and DAG");
    compress->add_option("--instance", instance_path, "Instance file")->required();
    compress->add_option("--edges", edges_path, "Edge list file: 'tail head' ids per line")
        ->required();
    compress->callback([&] {
        Instance inst = load_instance(instance_path);
        RotationPoset poset = build_rotation_poset(inst);
        EdgeSet edges = parse_edge_list(read_file(edges_path), poset.element_count());
        print_meta(std::cout, shrink(poset, edges));
    });

    auto* bouquet = app.add_subcommand(
        "bouquet", "Print the flowers defining the matchings that survive one error");
    bouquet->add_option("--instance", instance_path, "Instance file")->required();
    bouquet->add_option("--errors", errors_path, "Error file with exactly one error")
        ->required();
    bouquet->add_flag("--trace", trace, "Dump S, tail, X, Y, V per round to stderr");
    bouquet->callback([&] {
        Instance inst = load_instance(instance_path);
        RotationPoset poset = build_rotation_poset(inst);
        auto errors = parse_errors(read_file(errors_path), inst);
        if (errors.size() != 1)
            throw DomainError("bouquet expects exactly one error, got " +
                              std::to_string(errors.size()));
        Instance changed = apply_error(inst, errors[0]);
        LatticeOrientation o = errors[0].side == Side::girls ? LatticeOrientation::normal
                                                             : LatticeOrientation::reversed;
        Bouquet b = find_bouquet(
            inst, poset, [&](const Matching& m) { return is_stable(changed, m); }, o,
            trace ? &std::cerr : nullptr);
        for (const Flower& f : b.flowers) {
            std::cout << f.tail << ':';
            for (int h : f.heads) std::cout << ' ' << h;
            std::cout << '\n';
        }
    });

    auto* robust = app.add_subcommand(
        "robust", "Find a matching stable under every single-error variant");
    robust->add_option("--instance", instance_path, "Instance file")->required();
    robust->add_option("--errors", errors_path, "Error file, one error per line")->required();
    auto* weights_opt =
        robust->add_option("--weights", weights_path, "Weight file: n rows of n reals");
    robust->add_flag("--minimize", minimize, "Minimize total weight instead of maximizing")
        ->needs(weights_opt);
    robust->add_flag("--trace", trace, "Dump per-error edges and the condensation to stderr");
    robust->callback([&] {
        Instance inst = load_instance(instance_path);
        RotationPoset poset = build_rotation_poset(inst);
        auto errors = parse_errors(read_file(errors_path), inst);
        RobustResult result = build_robust(inst, poset, errors);
        if (trace) {
            for (size_t i = 0; i < errors.size(); ++i) {
                std::cerr << "error " << i + 1 << ": " << format_error(errors[i], inst.n())
                          << '\n';
                std::cerr << "edges " << i + 1 << ':';
                for (const Edge& e : result.per_error_edges[i].edges)
                    std::cerr << " (" << e.tail << ',' << e.head << ')';
                std::cerr << '\n';
            }
            print_meta(std::cerr, result.meta);
        }
        if (!result.exists) {
            std::cout << "NO FULLY ROBUST MATCHING\n";
            rc = 3;
            return;
        }
        if (weights_opt->count() == 0) {
            print_matching_line(std::cout, inst, *result.witness);
            return;
        }
        WeightFunction w = parse_weights(read_file(weights_path), inst.n());
        if (minimize)
            for (double& x : w.w) x = -x;
        auto best = max_weight_robust(inst, poset, result, w);
        print_matching_line(std::cout, inst, best->first);
        std::cout << "weight " << format_double(minimize ? -best->second : best->second)
                  << '\n';
    });

    auto* gen = app.add_subcommand("gen", "Generate a pseudo-random instance");
    GeneratorConfig cfg;
    std::map<std::string, GeneratorConfig::Mode> modes{
        {"uniform-random", GeneratorConfig::Mode::uniform_random},
        {"master-list", GeneratorConfig::Mode::master_list},
        {"adversarial-swap", GeneratorConfig::Mode::adversarial_swap},
    };
    gen->add_option("--n", cfg.n, "Number of boys/girls")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", cfg.seed, "64-bit seed (default 0)");
    gen->add_option("--mode", cfg.mode, "uniform-random (default), master-list, adversarial-swap")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    gen->callback([&] { std::cout << format_instance(generate(cfg)); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return rc;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace stablelattice::cli

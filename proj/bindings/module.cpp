// Python bindings for the main operations. Matchings cross the boundary as
// plain lists (partner_of_boy), closed sets and bitsets as sorted id lists,
// and edge sets as (tail, head) tuple lists, so the python surface needs no
// wrapper types beyond the structural classes below.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablelattice/bouquet.hpp"
#include "stablelattice/compression.hpp"
#include "stablelattice/core.hpp"
#include "stablelattice/errors.hpp"
#include "stablelattice/generate.hpp"
#include "stablelattice/oracle.hpp"
#include "stablelattice/robust.hpp"
#include "stablelattice/rotations.hpp"

namespace py = pybind11;

namespace {

using namespace stablelattice;

Matching to_matching(std::vector<int> partner_of_boy) {
    return Matching{std::move(partner_of_boy)};
}

std::vector<std::vector<int>> lists_of(const std::vector<Matching>& ms) {
    std::vector<std::vector<int>> out;
    out.reserve(ms.size());
    for (const Matching& m : ms) out.push_back(m.partner_of_boy);
    return out;
}

std::vector<std::pair<int, int>> pairs_of(const EdgeSet& e) {
    std::vector<std::pair<int, int>> out;
    out.reserve(e.edges.size());
    for (const Edge& edge : e.edges) out.emplace_back(edge.tail, edge.head);
    return out;
}

EdgeSet edges_of(const std::vector<std::pair<int, int>>& pairs, int element_count) {
    EdgeSet e;
    e.edges.reserve(pairs.size());
    for (auto [tail, head] : pairs) {
        if (tail < 0 || tail >= element_count || head < 0 || head >= element_count)
            throw DomainError("edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                              ") has an endpoint outside the poset's element ids");
        e.edges.push_back(Edge{tail, head});
    }
    return e;
}

ClosedSet closed_set_of(const std::vector<int>& ids, int element_count) {
    DynBitset bits(element_count);
    for (int id : ids) {
        if (id < 0 || id >= element_count)
            throw DomainError("element id " + std::to_string(id) + " is outside the poset");
        bits.set(id);
    }
    return ClosedSet{std::move(bits)};
}

WeightFunction weights_of(const std::vector<std::vector<double>>& rows, int expected_n) {
    WeightFunction w;
    w.n = static_cast<int>(rows.size());
    if (w.n != expected_n)
        throw DomainError("weights must form an n x n matrix (row = boy) with n = " +
                          std::to_string(expected_n));
    w.w.reserve(static_cast<std::size_t>(w.n) * w.n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != w.n)
            throw DomainError("weights must form an n x n matrix (row = boy)");
        w.w.insert(w.w.end(), row.begin(), row.end());
    }
    return w;
}

void check_agent_index(int index, int n, const char* what) {
    if (index < 0 || index >= n)
        throw DomainError(std::string(what) + " index " + std::to_string(index) +
                          " is outside 0.." + std::to_string(n - 1));
}

void check_element_id(const RotationPoset& poset, int id) {
    if (id < 0 || id >= poset.element_count())
        throw DomainError("element id " + std::to_string(id) + " is outside the poset");
}

}  // namespace

PYBIND11_MODULE(_stablelattice, m) {
    m.doc() =
        "Stable matching lattices: rotation posets, closed-set coordinates, "
        "sublattice compression, and robustness to preference errors.";

    // Registration order matters: translators run newest-first, so the base
    // goes first and the specific classes shadow it.
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::enum_<Side>(m, "Side")
        .value("boys", Side::boys)
        .value("girls", Side::girls);

    py::enum_<GeneratorConfig::Mode>(m, "Mode")
        .value("uniform_random", GeneratorConfig::Mode::uniform_random)
        .value("master_list", GeneratorConfig::Mode::master_list)
        .value("adversarial_swap", GeneratorConfig::Mode::adversarial_swap);

    py::enum_<LatticeOrientation>(m, "Orientation")
        .value("normal", LatticeOrientation::normal)
        .value("reversed", LatticeOrientation::reversed);

    py::class_<Instance>(m, "Instance",
                         "A complete strict preference profile; all indices 0-based.")
        .def(py::init<std::vector<std::vector<int>>, std::vector<std::vector<int>>>(),
             py::arg("boy_prefs"), py::arg("girl_prefs"))
        .def_property_readonly("n", &Instance::n)
        .def_property_readonly("boy_prefs",
                               [](const Instance& i) { return i.boy_prefs(); })
        .def_property_readonly("girl_prefs",
                               [](const Instance& i) { return i.girl_prefs(); })
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Instance& i) {
            return "<Instance n=" + std::to_string(i.n()) + ">";
        });

    py::class_<Rotation>(m, "Rotation",
                         "An ordered cyclic list of matched pairs; eliminating it moves "
                         "each boy to the next pair's girl.")
        .def_static("canonical", &Rotation::canonical, py::arg("pairs"),
                    "Validates and rotates the pair list so the smallest boy leads.")
        .def_readonly("pairs", &Rotation::pairs)
        .def("__len__", &Rotation::size)
        .def("__eq__", [](const Rotation& a, const Rotation& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Rotation& r) {
            std::string out = "Rotation([";
            for (std::size_t i = 0; i < r.pairs.size(); ++i) {
                if (i) out += ", ";
                out += "(" + std::to_string(r.pairs[i].first) + ", " +
                       std::to_string(r.pairs[i].second) + ")";
            }
            return out + "])";
        });

    py::class_<RotationPoset>(m, "RotationPoset",
                              "Precedence order on the rotations of an instance. Element ids: "
                              "s = 0, t = 1, rotations from 2 upward in a linear extension.")
        .def_readonly_static("id_s", &RotationPoset::id_s)
        .def_readonly_static("id_t", &RotationPoset::id_t)
        .def_readonly_static("first_rotation_id", &RotationPoset::first_rotation_id)
        .def_property_readonly("n", &RotationPoset::n)
        .def_property_readonly("element_count", &RotationPoset::element_count)
        .def_property_readonly("rotation_count", &RotationPoset::rotation_count)
        .def_property_readonly("hasse_edges",
                               [](const RotationPoset& p) { return p.hasse_edges(); })
        .def("rotation",
             [](const RotationPoset& p, int id) {
                 if (id < RotationPoset::first_rotation_id || id >= p.element_count())
                     throw DomainError("id " + std::to_string(id) + " is not a rotation id");
                 return p.rotation(id);
             },
             py::arg("id"))
        .def("precedes",
             [](const RotationPoset& p, int u, int v) {
                 check_element_id(p, u);
                 check_element_id(p, v);
                 return p.precedes(u, v);
             },
             py::arg("u"), py::arg("v"))
        .def("move_to",
             [](const RotationPoset& p, int boy, int girl) {
                 check_agent_index(boy, p.n(), "boy");
                 check_agent_index(girl, p.n(), "girl");
                 return p.move_to(boy, girl);
             },
             py::arg("boy"), py::arg("girl"),
             "The element moving this boy to this girl, or None.")
        .def("move_from",
             [](const RotationPoset& p, int boy, int girl) {
                 check_agent_index(boy, p.n(), "boy");
                 check_agent_index(girl, p.n(), "girl");
                 return p.move_from(boy, girl);
             },
             py::arg("boy"), py::arg("girl"),
             "The element moving this boy away from this girl, or None.")
        .def("__repr__", [](const RotationPoset& p) {
            return "<RotationPoset n=" + std::to_string(p.n()) + " rotations=" +
                   std::to_string(p.rotation_count()) + ">";
        });

    py::class_<ErrorSpec>(m, "ErrorSpec",
                          "One agent replaces their full preference list; agent and the "
                          "list entries are 1-based, as in the text formats.")
        .def(py::init([](Side side, int agent, std::vector<int> new_list) {
                 ErrorSpec err;
                 err.side = side;
                 err.agent = agent;
                 err.new_list = std::move(new_list);
                 return err;
             }),
             py::arg("side"), py::arg("agent"), py::arg("new_list"))
        .def_readwrite("side", &ErrorSpec::side)
        .def_readwrite("agent", &ErrorSpec::agent)
        .def_readwrite("new_list", &ErrorSpec::new_list)
        .def("__eq__", [](const ErrorSpec& a, const ErrorSpec& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const ErrorSpec& e) {
            std::string out = e.side == Side::girls ? "ErrorSpec(girl " : "ErrorSpec(boy ";
            out += std::to_string(e.agent) + ": ";
            for (std::size_t i = 0; i < e.new_list.size(); ++i) {
                if (i) out += " ";
                out += std::to_string(e.new_list[i]);
            }
            return out + ")";
        });

    py::class_<Flower>(m, "Flower",
                       "One tail with its incomparable heads; splitting_set is the "
                       "splitting set current when the flower was found (element ids).")
        .def_readonly("tail", &Flower::tail)
        .def_readonly("heads", &Flower::heads)
        .def_property_readonly("splitting_set",
                               [](const Flower& f) { return f.splitting_set.to_vector(); })
        .def("__repr__", [](const Flower& f) {
            std::string out = "Flower(tail=" + std::to_string(f.tail) + ", heads=[";
            for (std::size_t i = 0; i < f.heads.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(f.heads[i]);
            }
            return out + "])";
        });

    py::class_<Bouquet>(m, "Bouquet",
                        "find_bouquet output: flowers in discovery order plus the defining "
                        "edges in primal orientation.")
        .def_readonly("flowers", &Bouquet::flowers)
        .def_readonly("orientation", &Bouquet::orientation)
        .def_property_readonly("defining_edges",
                               [](const Bouquet& b) { return pairs_of(b.defining_edges); });

    py::class_<MetaPoset>(m, "MetaPoset",
                          "A compression: element ids partitioned into blocks plus an acyclic "
                          "precedence; its proper closed sets generate a sublattice.")
        .def(py::init<int, std::vector<std::vector<int>>, std::vector<std::pair<int, int>>,
                      int, int>(),
             py::arg("element_count"), py::arg("blocks"), py::arg("dag_edges"),
             py::arg("a_s"), py::arg("a_t"))
        .def_property_readonly("element_count", &MetaPoset::element_count)
        .def_property_readonly("block_count", &MetaPoset::block_count)
        .def_property_readonly("blocks", [](const MetaPoset& p) { return p.blocks(); })
        .def_property_readonly("dag_edges", [](const MetaPoset& p) { return p.dag_edges(); })
        .def_property_readonly("a_s", &MetaPoset::a_s)
        .def_property_readonly("a_t", &MetaPoset::a_t)
        .def("block_of",
             [](const MetaPoset& p, int element) {
                 if (element < 0 || element >= p.element_count())
                     throw DomainError("element id " + std::to_string(element) +
                                       " is outside the compression");
                 return p.block_of(element);
             },
             py::arg("element"))
        .def("__repr__", [](const MetaPoset& p) {
            return "<MetaPoset blocks=" + std::to_string(p.block_count()) + ">";
        });

    py::class_<RobustResult>(m, "RobustResult",
                             "build_robust output: the compression by the union of all "
                             "per-error edges, the existence flag, and a witness.")
        .def_readonly("meta", &RobustResult::meta)
        .def_readonly("exists", &RobustResult::exists)
        .def_property_readonly("witness",
                               [](const RobustResult& r) -> std::optional<std::vector<int>> {
                                   if (!r.witness.has_value()) return std::nullopt;
                                   return r.witness->partner_of_boy;
                               })
        .def_property_readonly("per_error_edges", [](const RobustResult& r) {
            std::vector<std::vector<std::pair<int, int>>> out;
            out.reserve(r.per_error_edges.size());
            for (const EdgeSet& e : r.per_error_edges) out.push_back(pairs_of(e));
            return out;
        });

    // --- text formats -------------------------------------------------------

    m.def("parse_instance", &parse_instance, py::arg("text"),
          "Reads the instance text format (first line n, then the 2n lists).");
    m.def("format_instance", &format_instance, py::arg("instance"));
    m.def("parse_errors", &parse_errors, py::arg("text"), py::arg("instance"),
          "Reads error lines like 'girl 3: b a d c' or 'boy 2: 1 3 2 4'.");
    m.def("format_error", &format_error, py::arg("error"), py::arg("n"));

    // --- instances and matchings -------------------------------------------

    m.def("generate",
          [](int n, std::uint64_t seed, GeneratorConfig::Mode mode) {
              GeneratorConfig cfg;
              cfg.n = n;
              cfg.seed = seed;
              cfg.mode = mode;
              return generate(cfg);
          },
          py::arg("n"), py::arg("seed") = 0,
          py::arg("mode") = GeneratorConfig::Mode::uniform_random,
          "Seeded instance generator; identical output on every platform.");

    m.def("deferred_acceptance",
          [](const Instance& inst, Side proposing) {
              return deferred_acceptance(inst, proposing).partner_of_boy;
          },
          py::arg("instance"), py::arg("proposing") = Side::boys,
          "Boys proposing yields the boy-optimal matching, girls the girl-optimal.");

    m.def("is_stable",
          [](const Instance& inst, std::vector<int> matching) {
              return is_stable(inst, to_matching(std::move(matching)));
          },
          py::arg("instance"), py::arg("matching"));

    m.def("blocking_pairs",
          [](const Instance& inst, std::vector<int> matching) {
              std::vector<std::pair<int, int>> out;
              for (const BlockingPair& p : blocking_pairs(inst, to_matching(std::move(matching))))
                  out.emplace_back(p.boy, p.girl);
              return out;
          },
          py::arg("instance"), py::arg("matching"),
          "All (boy, girl) pairs preferring each other to their partners.");

    m.def("meet",
          [](const Instance& inst, std::vector<int> m1, std::vector<int> m2) {
              return meet(inst, to_matching(std::move(m1)), to_matching(std::move(m2)))
                  .partner_of_boy;
          },
          py::arg("instance"), py::arg("m1"), py::arg("m2"),
          "Every boy takes the more preferred of his two partners.");
    m.def("join",
          [](const Instance& inst, std::vector<int> m1, std::vector<int> m2) {
              return join(inst, to_matching(std::move(m1)), to_matching(std::move(m2)))
                  .partner_of_boy;
          },
          py::arg("instance"), py::arg("m1"), py::arg("m2"),
          "Every boy takes the less preferred of his two partners.");
    m.def("dominates",
          [](const Instance& inst, std::vector<int> m1, std::vector<int> m2) {
              return dominates(inst, to_matching(std::move(m1)), to_matching(std::move(m2)));
          },
          py::arg("instance"), py::arg("m1"), py::arg("m2"),
          "True iff every boy weakly prefers his m1-partner.");

    m.def("enumerate_stable",
          [](const Instance& inst, int bound) {
              return lists_of(enumerate_stable(inst, bound).matchings);
          },
          py::arg("instance"), py::arg("bound") = kDefaultExhaustiveBound,
          "All stable matchings, sorted; refuses instances larger than bound.");

    m.def("format_matching",
          [](const Instance& inst, std::vector<int> matching) {
              return format_matching(inst, to_matching(std::move(matching)));
          },
          py::arg("instance"), py::arg("matching"));

    // --- rotation poset and closed sets --------------------------------------

    m.def("build_rotation_poset", &build_rotation_poset, py::arg("instance"),
          "Discovers all rotations, derives precedence, reduces the order.");

    m.def("exposed_rotations",
          [](const Instance& inst, std::vector<int> matching) {
              return exposed_rotations(inst, to_matching(std::move(matching)));
          },
          py::arg("instance"), py::arg("matching"));

    m.def("eliminate",
          [](const Instance& inst, std::vector<int> matching, const Rotation& rho) {
              return eliminate(inst, to_matching(std::move(matching)), rho).partner_of_boy;
          },
          py::arg("instance"), py::arg("matching"), py::arg("rotation"));

    m.def("enumerate_proper_closed_sets",
          [](const RotationPoset& poset) {
              std::vector<std::vector<int>> out;
              for (const ClosedSet& cs : enumerate_proper_closed_sets(poset))
                  out.push_back(cs.members.to_vector());
              return out;
          },
          py::arg("poset"),
          "Every downward-closed id set containing s and excluding t, sorted.");

    m.def("matching_from_closed_set",
          [](const RotationPoset& poset, const Instance& inst, const std::vector<int>& ids) {
              return matching_from_closed_set(poset, inst,
                                              closed_set_of(ids, poset.element_count()))
                  .partner_of_boy;
          },
          py::arg("poset"), py::arg("instance"), py::arg("closed_set"));

    m.def("closed_set_from_matching",
          [](const RotationPoset& poset, const Instance& inst, std::vector<int> matching) {
              return closed_set_from_matching(poset, inst, to_matching(std::move(matching)))
                  .members.to_vector();
          },
          py::arg("poset"), py::arg("instance"), py::arg("matching"));

    // --- compression ----------------------------------------------------------

    m.def("shrink",
          [](const RotationPoset& poset, const std::vector<std::pair<int, int>>& edges) {
              return shrink(poset, edges_of(edges, poset.element_count()));
          },
          py::arg("poset"), py::arg("edges"),
          "Adds the edges to the Hasse diagram and shrinks strong components.");

    m.def("closed_sets_of_meta",
          [](const MetaPoset& meta) {
              std::vector<std::vector<int>> out;
              for (const ClosedSet& cs : closed_sets_of_meta(meta))
                  out.push_back(cs.members.to_vector());
              return out;
          },
          py::arg("meta"),
          "Proper closed sets of the compression, expanded to element ids.");

    m.def("sublattice_from_edges",
          [](const RotationPoset& poset, const Instance& inst,
             const std::vector<std::pair<int, int>>& edges) {
              return lists_of(
                  sublattice_from_edges(poset, inst, edges_of(edges, poset.element_count())));
          },
          py::arg("poset"), py::arg("instance"), py::arg("edges"),
          "All stable matchings whose closed sets separate none of the edges.");

    m.def("compression_from_sublattice",
          [](const RotationPoset& poset, const Instance& inst,
             const std::vector<std::vector<int>>& sub) {
              std::vector<Matching> matchings;
              matchings.reserve(sub.size());
              for (const auto& m : sub) matchings.push_back(to_matching(m));
              return compression_from_sublattice(poset, inst, matchings);
          },
          py::arg("poset"), py::arg("instance"), py::arg("sublattice"),
          "Builds a compression generating exactly the given sublattice.");

    m.def("minimize_edges",
          [](const RotationPoset& poset, const std::vector<std::pair<int, int>>& edges) {
              return pairs_of(minimize_edges(poset, edges_of(edges, poset.element_count())));
          },
          py::arg("poset"), py::arg("edges"),
          "Drops edges that do not change the generated sublattice.");

    // --- bouquets and robustness ----------------------------------------------

    m.def("find_bouquet",
          [](const Instance& inst, const RotationPoset& poset, const py::function& oracle,
             LatticeOrientation orientation) {
              MembershipOracle wrapped = [&oracle](const Matching& m) {
                  return py::cast<bool>(oracle(m.partner_of_boy));
              };
              return find_bouquet(inst, poset, wrapped, orientation);
          },
          py::arg("instance"), py::arg("poset"), py::arg("oracle"),
          py::arg("orientation") = LatticeOrientation::normal,
          "Finds the defining edges of the sublattice selected by the membership "
          "oracle (a callable taking a matching list and returning bool).");

    m.def("apply_error", &apply_error, py::arg("instance"), py::arg("error"));

    m.def("edges_for_error",
          [](const Instance& inst, const RotationPoset& poset, const ErrorSpec& err) {
              return pairs_of(edges_for_error(inst, poset, err));
          },
          py::arg("instance"), py::arg("poset"), py::arg("error"),
          "Defining edges of the sublattice of matchings surviving this error.");

    m.def("build_robust", &build_robust, py::arg("instance"), py::arg("poset"),
          py::arg("errors"),
          "Full pipeline: per-error bouquets, edge union, shrink, witness.");

    m.def("max_weight_robust",
          [](const Instance& inst, const RotationPoset& poset, const RobustResult& robust,
             const std::vector<std::vector<double>>& weights)
              -> std::optional<std::pair<std::vector<int>, double>> {
              auto best = max_weight_robust(inst, poset, robust, weights_of(weights, inst.n()));
              if (!best.has_value()) return std::nullopt;
              return std::make_pair(best->first.partner_of_boy, best->second);
          },
          py::arg("instance"), py::arg("poset"), py::arg("robust"), py::arg("weights"),
          "Maximum-weight fully robust matching, or None; weights[boy][girl].");

    m.def("matching_weight",
          [](std::vector<int> matching, const std::vector<std::vector<double>>& weights) {
              int n = static_cast<int>(matching.size());
              for (int g : matching) check_agent_index(g, n, "girl");
              return matching_weight(to_matching(std::move(matching)), weights_of(weights, n));
          },
          py::arg("matching"), py::arg("weights"));

    m.def("brute_force_robust",
          [](const Instance& inst, const std::vector<ErrorSpec>& errors, int bound) {
              return lists_of(brute_force_robust(inst, errors, bound));
          },
          py::arg("instance"), py::arg("errors"), py::arg("bound") = kDefaultExhaustiveBound,
          "Oracle: matchings stable under the instance and every error, by "
          "exhaustive enumeration; refuses instances larger than bound.");
}

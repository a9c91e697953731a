#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "matchstat/dyck.hpp"
#include "matchstat/group.hpp"
#include "matchstat/matching.hpp"
#include "matchstat/similarity.hpp"
#include "matchstat/transforms.hpp"
#include "matchstat/verify.hpp"

namespace py = pybind11;
using namespace matchstat;

namespace {

py::object big_int(const mpz_class& value) {
  return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple element_tuple(const GroupElement& e) {
  py::tuple t(e.coords.size());
  for (std::size_t i = 0; i < e.coords.size(); ++i) t[i] = e.coords[i];
  return t;
}

GroupSpec spec_from(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return GroupSpec::preset(spec.cast<std::string>());
  return spec.cast<GroupSpec>();
}

SeqMethod seq_method(const std::string& name) {
  if (name == "recursive") return SeqMethod::kRecursive;
  if (name == "direct") return SeqMethod::kDirect;
  throw std::invalid_argument("method must be 'recursive' or 'direct'");
}

DistMethod dist_method(const std::string& name) {
  if (name == "brute") return DistMethod::kBrute;
  if (name == "sequence") return DistMethod::kSequence;
  throw std::invalid_argument("method must be 'brute' or 'sequence'");
}

}  // namespace

PYBIND11_MODULE(matchstat, m) {
  m.doc() = "Crossing/nesting statistics of perfect matchings: enumeration, group-valued "
            "statistics, similarity classes, Dyck encodings and identity checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Matching>(m, "Matching")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return Matching::parse(text); }), py::arg("text"))
      .def_static("parse", &Matching::parse, py::arg("text"))
      .def_static("from_edges", &Matching::from_edges, py::arg("edges"))
      .def_static("fully_nested", &Matching::fully_nested, py::arg("n"))
      .def_static("fully_adjacent", &Matching::fully_adjacent, py::arg("n"))
      .def_static("permutational", &Matching::permutational, py::arg("pi"))
      .def_property_readonly("n", &Matching::size)
      .def("edges", &Matching::edges)
      .def("partner", &Matching::partner, py::arg("vertex"))
      .def("crossings", &Matching::crossings)
      .def("nestings", &Matching::nestings)
      .def("camels", &Matching::camels)
      .def("insert_first_edge", &Matching::insert_first_edge, py::arg("gap"))
      .def("remove_first_edge", &Matching::remove_first_edge)
      .def("children", &Matching::children)
      .def("format", &Matching::format)
      .def("__str__", &Matching::format)
      .def("__repr__", [](const Matching& v) { return "Matching(\"" + v.format() + "\")"; })
      .def("__hash__", [](const Matching& v) { return py::hash(py::str(v.format())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init([](int k, std::int64_t mod, std::vector<std::int64_t> alpha,
                       std::vector<std::int64_t> beta) {
             return GroupSpec(k, mod, GroupElement{std::move(alpha)},
                              GroupElement{std::move(beta)});
           }),
           py::arg("k"), py::arg("m"), py::arg("alpha"), py::arg("beta"))
      .def_static("preset", &GroupSpec::preset, py::arg("name"))
      .def_property_readonly("k", &GroupSpec::dimension)
      .def_property_readonly("m", &GroupSpec::modulus)
      .def_property_readonly("alpha", [](const GroupSpec& s) { return s.alpha().coords; })
      .def_property_readonly("beta", [](const GroupSpec& s) { return s.beta().coords; })
      .def("swapped", &GroupSpec::swapped)
      .def("to_json", [](const GroupSpec& s) { return json_to_py(s.to_json()); })
      .def("__repr__", [](const GroupSpec& s) { return "GroupSpec(" + s.to_json().dump() + ")"; });

  py::class_<DyckPath>(m, "DyckPath")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return DyckPath::parse(text); }), py::arg("text"))
      .def_static("parse", &DyckPath::parse, py::arg("text"))
      .def_property_readonly("n", &DyckPath::semilength)
      .def("word", &DyckPath::word)
      .def("__str__", &DyckPath::word)
      .def("__repr__", [](const DyckPath& d) { return "DyckPath(\"" + d.word() + "\")"; })
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("parse_matching", &Matching::parse, py::arg("text"));
  m.def("level_size",
        [](int n, int l) { return big_int(level_size(n, l)); }, py::arg("n"), py::arg("l"));
  m.def("double_factorial_odd", [](int n) { return big_int(double_factorial_odd(n)); },
        py::arg("n"));
  m.def("catalan", [](int n) { return big_int(catalan(n)); }, py::arg("n"));
  m.def("enumerate_matchings",
        [](int n, std::uint64_t cap) { return all_matchings(n, cap); }, py::arg("n"),
        py::arg("cap") = kDefaultCap);
  m.def("level",
        [](const Matching& root, int depth, std::uint64_t cap) {
          return level_matchings(root, depth, cap);
        },
        py::arg("root"), py::arg("depth"), py::arg("cap") = kDefaultCap);
  m.def("gap_profile", [](const Matching& v) {
    const GapProfile gp = gap_profile(v);
    return py::make_tuple(gp.cover, gp.left);
  });
  m.def("crossing_sequence", &crossing_sequence, py::arg("matching"));
  m.def("nesting_sequence", &nesting_sequence, py::arg("matching"));

  m.def("statistic",
        [](const Matching& v, const py::object& spec) {
          return element_tuple(statistic(v, spec_from(spec)));
        },
        py::arg("matching"), py::arg("spec"));
  m.def("seq",
        [](const Matching& v, const py::object& spec, const std::string& method) {
          const GroupSequence s = seq(v, spec_from(spec), seq_method(method));
          py::list terms;
          for (const GroupElement& e : s.terms) terms.append(element_tuple(e));
          return terms;
        },
        py::arg("matching"), py::arg("spec"), py::arg("method") = "direct");
  m.def("level_distribution",
        [](const Matching& v, int depth, const py::object& spec, const std::string& method,
           std::uint64_t cap, int threads) {
          const auto dist =
              level_distribution(v, depth, spec_from(spec), dist_method(method), cap, threads);
          py::dict out;
          for (const GroupElement& e : dist.sorted()) {
            py::tuple key = element_tuple(e);
            out[key] = out.contains(key) ? out[key].cast<std::uint64_t>() + 1 : 1;
          }
          return out;
        },
        py::arg("matching"), py::arg("depth"), py::arg("spec"), py::arg("method") = "brute",
        py::arg("cap") = kDefaultCap, py::arg("threads") = 1);

  m.def("similarity_key",
        [](const Matching& v, const py::object& spec) {
          const SimilarityKey key = similarity_key(v, spec_from(spec));
          py::list bag;
          for (const GroupElement& e : key.bag) bag.append(element_tuple(e));
          return py::make_tuple(element_tuple(key.value), bag);
        },
        py::arg("matching"), py::arg("spec"));
  m.def("are_similar",
        [](const Matching& a, const Matching& b, const py::object& spec) {
          return are_similar(a, b, spec_from(spec));
        },
        py::arg("m"), py::arg("n"), py::arg("spec"));
  m.def("are_swap_similar",
        [](const Matching& a, const Matching& b, const py::object& spec) {
          return are_swap_similar(a, b, spec_from(spec));
        },
        py::arg("m"), py::arg("n"), py::arg("spec"));
  m.def("partition_classes",
        [](int n, const py::object& spec, bool swapped, std::uint64_t cap, int threads) {
          py::list out;
          for (const auto& cls : partition_classes(n, spec_from(spec), swapped, cap, threads)) {
            out.append(cls.members);
          }
          return out;
        },
        py::arg("n"), py::arg("spec"), py::arg("swapped") = false, py::arg("cap") = kDefaultCap,
        py::arg("threads") = 1);
  m.def("cr_class_count_formula",
        [](int n) { return big_int(cr_class_count_formula(n)); }, py::arg("n"));
  m.def("ne_class_count_formula",
        [](int n) { return big_int(ne_class_count_formula(n)); }, py::arg("n"));
  m.def("ne_positive_class_count_formula",
        [](int n) { return big_int(ne_positive_class_count_formula(n)); }, py::arg("n"));
  m.def("mod2_classes",
        [](int n, const std::string& stat, std::uint64_t cap, int threads) {
          const Mod2Classes c = mod2_classes(
              n, stat == "cr2" ? Mod2Stat::kCr2 : Mod2Stat::kNe2, cap, threads);
          py::dict out;
          out["brute_count"] = c.brute_count;
          out["brute_sizes"] = c.brute_sizes;
          out["formula_count"] = big_int(c.formula_count);
          py::list sizes;
          for (const auto& s : c.formula_sizes) sizes.append(big_int(s));
          out["formula_sizes"] = sizes;
          return out;
        },
        py::arg("n"), py::arg("stat"), py::arg("cap") = kDefaultCap, py::arg("threads") = 1);
  m.def("is_permutational", &is_permutational, py::arg("matching"));

  m.def("to_dyck", &to_dyck, py::arg("matching"));
  m.def("altitude_sequence", &altitude_sequence, py::arg("path"));
  m.def("profile", &profile, py::arg("path"));
  m.def("down_sequence", &down_sequence, py::arg("path"));
  m.def("tunnels",
        [](const DyckPath& d) {
          py::list out;
          for (const Tunnel& t : tunnels(d)) out.append(py::make_tuple(t.up, t.down));
          return out;
        },
        py::arg("path"));
  m.def("tunnel_cover_count", &tunnel_cover_count, py::arg("path"));
  m.def("noncrossing_preimage", &noncrossing_preimage, py::arg("path"));
  m.def("path_from_profile", &path_from_profile, py::arg("profile"));
  m.def("profile_weight", &profile_weight, py::arg("profile"));
  m.def("realizable_crossings", &realizable_crossings, py::arg("profile"));
  m.def("dyck_paths", &dyck_paths, py::arg("n"), py::arg("cap") = kDefaultCap);
  m.def("compositions", &compositions, py::arg("n"));

  m.def("min_width_pair",
        [](const Matching& v, const std::string& kind) -> py::object {
          const auto p = min_width_pair(
              v, kind == "crossing" ? PairKind::kCrossing : PairKind::kNesting);
          if (!p) return py::none();
          py::dict out;
          out["e"] = p->e;
          out["f"] = p->f;
          out["width"] = p->width;
          out["side"] = p->side == WidthSide::kFirst ? "first" : "second";
          return out;
        },
        py::arg("matching"), py::arg("kind"));
  m.def("nc_transform", &nc_transform, py::arg("matching"));
  m.def("cn_transform", &cn_transform, py::arg("matching"));
  m.def("transform_steps",
        [](const Matching& v, const std::string& kind, int k) {
          return transform_steps(
              v, kind == "cn" ? PairKind::kCrossing : PairKind::kNesting, k);
        },
        py::arg("matching"), py::arg("kind"), py::arg("steps") = 1);

  m.def("check_theorem1",
        [](const Matching& a, const Matching& b, const py::object& spec, bool swapped,
           int depth, std::uint64_t cap, int threads) {
          return json_to_py(
              check_theorem1(a, b, spec_from(spec), swapped, depth, cap, threads).to_json());
        },
        py::arg("m"), py::arg("n"), py::arg("spec"), py::arg("swapped") = false,
        py::arg("depth") = 3, py::arg("cap") = kDefaultCap, py::arg("threads") = 1);
  m.def("check_named",
        [](const std::string& id, int n, int depth, std::uint64_t cap, int threads) {
          VerifyOptions opts;
          opts.n = n;
          opts.depth = depth;
          opts.cap = cap;
          opts.threads = threads;
          return json_to_py(check_named(id, opts).to_json());
        },
        py::arg("id"), py::arg("n") = -1, py::arg("depth") = -1, py::arg("cap") = kDefaultCap,
        py::arg("threads") = 1);
  m.def("known_check_ids", [] { return known_check_ids(); });
  m.def("run_all",
        [](int n, int depth, std::uint64_t cap, int threads) {
          VerifyOptions opts;
          opts.n = n;
          opts.depth = depth;
          opts.cap = cap;
          opts.threads = threads;
          py::list out;
          for (const Report& r : run_all(opts)) out.append(json_to_py(r.to_json()));
          return out;
        },
        py::arg("n") = -1, py::arg("depth") = -1, py::arg("cap") = kDefaultCap,
        py::arg("threads") = 1);

  m.attr("DEFAULT_CAP") = kDefaultCap;
  m.attr("PRESETS") = GroupSpec::preset_names();
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mglab/groups.hpp"
#include "mglab/int_matrix.hpp"
#include "mglab/presets.hpp"

namespace py = pybind11;
using mglab::Json;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

mglab::ReportOptions options(std::uint64_t seed) {
  mglab::ReportOptions o;
  o.seed = seed;
  return o;
}

mglab::Presentation presentation_from(const std::vector<std::string>& gens,
                                      const std::vector<std::string>& relators) {
  std::vector<mglab::FreeWord> rels;
  for (const auto& r : relators) rels.push_back(mglab::FreeWord::parse(r, gens));
  return mglab::make_presentation(gens, rels);
}

py::dict presentation_to_py(const mglab::Presentation& p) {
  py::dict out;
  py::list gens, rels;
  for (const auto& g : p.generators) gens.append(g);
  for (const auto& r : p.relators) rels.append(r.str(p.generators));
  out["generators"] = gens;
  out["relators"] = rels;
  out["deficiency"] = mglab::presentation_deficiency(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations in the space of marked groups: Cayley balls, "
            "ultrametric distances, group rings with direct-finiteness scans, "
            "crossed products, congruence chains and SL_n(Z[1/p]) order "
            "experiments";

  m.attr("__version__") = mglab::kVersion;

  m.def(
      "ball",
      [](const std::string& family, int radius) {
        return json_to_py(mglab::ball_report(family, radius, {}));
      },
      py::arg("family"), py::arg("radius"),
      "Cayley ball summary for a family spec like 'z', 'zmod:7', 'free:2', "
      "'sanov', 'sanovmod:9' or 'slnp:3:3'");

  m.def(
      "trivial_words",
      [](const std::string& family, int radius) {
        mglab::MarkedGroup mg = mglab::make_family(family);
        mglab::TrivialWordSet set = mglab::trivial_words(mg, radius);
        std::vector<std::string> out;
        for (const auto& w : set.words()) out.push_back(w.str());
        return out;
      },
      py::arg("family"), py::arg("radius"));

  m.def(
      "valuation",
      [](const std::string& a, const std::string& b, int cap) {
        mglab::Valuation v =
            mglab::valuation(mglab::make_family(a), mglab::make_family(b), cap);
        py::dict out;
        out["valuation"] = v.value;
        out["at_least_cap"] = v.at_least_cap;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("cap") = 10);

  m.def(
      "distance",
      [](const std::string& a, const std::string& b, int cap) {
        return json_to_py(mglab::distance_report(a, b, cap, {}));
      },
      py::arg("a"), py::arg("b"), py::arg("cap") = 10);

  m.def(
      "word_norm",
      [](const std::string& family, const std::string& word, int cap) -> py::object {
        mglab::MarkedGroup mg = mglab::make_family(family);
        mglab::Elem g = mglab::evaluate_word(mg.group, mg.marking,
                                             mglab::FreeWord::parse(word));
        auto n = mglab::word_norm(mg, g, cap);
        if (!n) return py::none();
        return py::int_(*n);
      },
      py::arg("family"), py::arg("word"), py::arg("cap") = 32);

  m.def(
      "converge",
      [](const std::string& family, std::int64_t modulus, int length, int rmax) {
        mglab::QuotientChain chain = family == "sanov" ? mglab::sanov_chain(modulus, length)
                                                       : mglab::z_chain(modulus, length);
        return json_to_py(mglab::converge_report(chain, rmax, 0, {}));
      },
      py::arg("family"), py::arg("modulus"), py::arg("length"), py::arg("rmax") = 6);

  m.def(
      "transfer",
      [](const std::string& pair, std::int64_t modulus, int length) {
        if (pair == "t") {
          mglab::QuotientChain chain = mglab::z_chain(modulus, length);
          return json_to_py(mglab::transfer_pair_report("t", &chain, {}));
        }
        return json_to_py(mglab::transfer_pair_report(pair, nullptr, {}));
      },
      py::arg("pair") = "t", py::arg("modulus") = 3, py::arg("length") = 4);

  m.def(
      "transfer_random",
      [](int count, std::uint64_t seed) {
        return json_to_py(mglab::transfer_random_report(count, options(seed)));
      },
      py::arg("count") = 20, py::arg("seed") = 0);

  m.def(
      "direct_finiteness",
      [](const std::string& ring, const std::string& group) {
        return json_to_py(mglab::df_report(ring, group, {}));
      },
      py::arg("ring"), py::arg("group"));

  m.def(
      "direct_finiteness_crossed",
      [](const std::string& system) {
        return json_to_py(mglab::df_crossed_report(system, {}));
      },
      py::arg("system") = "frobenius");

  m.def(
      "crossed_validate",
      [](const std::string& system) {
        return json_to_py(
            mglab::crossed_validate_report(mglab::make_crossed_system(system), {}));
      },
      py::arg("system"));

  m.def("crossed_decompose",
        [](const std::string& preset) {
          return json_to_py(mglab::crossed_decompose_report(preset, {}));
        },
        py::arg("preset") = "z2s3-c3");

  m.def(
      "make_generators",
      [](int n, std::int64_t p) {
        mglab::GammaGenerators g = mglab::make_generators(n, p);
        py::dict out;
        out["a"] = mglab::laurent_mat_str(g.a);
        out["b"] = mglab::laurent_mat_str(g.b);
        out["x"] = mglab::laurent_mat_str(g.x);
        out["x_pow_p_equals_a"] =
            mglab::laurent_mat_pow(g.x, static_cast<std::uint64_t>(p)) == g.a;
        out["sanov_scale_warning"] = g.sanov_scale_warning;
        return out;
      },
      py::arg("n") = 3, py::arg("p") = 3);

  m.def(
      "verify_order_step",
      [](int n, std::int64_t p, std::int64_t q) {
        mglab::OrderReport r = mglab::verify_order_step(n, p, q);
        py::dict out;
        out["q"] = r.q;
        out["o_a"] = r.o_a;
        out["o_x"] = r.o_x;
        out["subgroup_equal"] = r.subgroup_equal;
        out["gcd_ox_p"] = r.gcd_ox_p;
        return out;
      },
      py::arg("n"), py::arg("p"), py::arg("q"));

  m.def(
      "slnp_orders",
      [](int n, std::int64_t p, std::int64_t q_max) {
        return json_to_py(mglab::slnp_orders_report(n, p, q_max, {}));
      },
      py::arg("n") = 3, py::arg("p") = 3, py::arg("q_max") = 50);

  m.def(
      "slnp_vanish",
      [](int n, std::int64_t p, std::int64_t q_max, int samples, std::uint64_t seed) {
        return json_to_py(mglab::slnp_vanish_report(n, p, q_max, samples, options(seed)));
      },
      py::arg("n") = 3, py::arg("p") = 3, py::arg("q_max") = 30, py::arg("samples") = 10,
      py::arg("seed") = 0);

  m.def(
      "sanov_word",
      [](const std::vector<std::vector<std::int64_t>>& mat) -> py::object {
        if (mat.size() != 2 || mat[0].size() != 2 || mat[1].size() != 2)
          throw py::value_error("expected a 2x2 integer matrix");
        mglab::IntMat m;
        m.n = 2;
        m.a = {mat[0][0], mat[0][1], mat[1][0], mat[1][1]};
        auto w = mglab::sanov_membership(m);
        if (!w) return py::none();
        return py::str(w->str());
      },
      py::arg("matrix"),
      "reduced word for a member of the Sanov subgroup, None otherwise");

  m.def(
      "amalgam",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& relators,
         int r) {
        return presentation_to_py(
            mglab::amalgam_presentation(presentation_from(gens, relators), r));
      },
      py::arg("generators"), py::arg("relators"), py::arg("r") = 2);

  m.def(
      "hnn",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& relators,
         int r) {
        return presentation_to_py(
            mglab::hnn_presentation(presentation_from(gens, relators), r));
      },
      py::arg("generators"), py::arg("relators"), py::arg("r") = 2);

  m.def(
      "deficiency",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& relators) {
        return mglab::presentation_deficiency(presentation_from(gens, relators));
      },
      py::arg("generators"), py::arg("relators"));
}

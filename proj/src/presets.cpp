#include "mglab/presets.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "mglab/groups.hpp"
#include "mglab/int_matrix.hpp"
#include "mglab/matrix_io.hpp"
#include "mglab/rings.hpp"

namespace mglab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  try {
    return std::stoll(s);
  } catch (...) {
    throw InvalidSpecError("bad " + what + ": '" + s + "'");
  }
}

}  // namespace

MarkedGroup make_family(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "z") {
    return {integers(), {z_elem(1)}, "z"};
  }
  if (kind == "zmod" && parts.size() == 2) {
    std::int64_t m = to_int(parts[1], "modulus");
    if (m < 1) throw InvalidSpecError("modulus must be >= 1");
    Group g = cyclic(m);
    return {g, {cyclic_elem(g, 1)}, spec};
  }
  if (kind == "free" && parts.size() == 2) {
    int k = static_cast<int>(to_int(parts[1], "rank"));
    if (k < 1 || k > 26) throw InvalidSpecError("free rank must be 1..26");
    Group g = free_group(k);
    std::vector<Elem> marking;
    for (int i = 0; i < k; ++i) marking.push_back(word_elem(FreeWord::generator(i)));
    return {g, std::move(marking), spec};
  }
  if (kind == "sanov" && parts.size() == 1) {
    Group g = special_linear_z(2);
    return {g, {intmat_elem(sanov_a()), intmat_elem(sanov_b())}, "sanov"};
  }
  if (kind == "sanovmod" && parts.size() == 2) {
    std::int64_t m = to_int(parts[1], "modulus");
    Group g = special_linear_mod(2, m);
    return {g,
            {modmat_elem(reduce_int_mat(sanov_a(), m)),
             modmat_elem(reduce_int_mat(sanov_b(), m))},
            spec};
  }
  if (kind == "slnp" && parts.size() == 3) {
    int n = static_cast<int>(to_int(parts[1], "dimension"));
    std::int64_t p = to_int(parts[2], "prime");
    GammaGenerators gg = make_generators(n, p);
    Group g = special_linear_laurent(n, p);
    return {g, {laurent_elem(gg.a), laurent_elem(gg.b), laurent_elem(gg.x)}, spec};
  }
  if (kind == "matrix-file" && parts.size() >= 2) {
    std::string path = spec.substr(std::string("matrix-file:").size());
    std::ifstream in(path);
    if (!in) throw InvalidSpecError("cannot open matrix file: " + path);
    MatrixFile mf = read_matrix_file(in);
    if (mf.modular()) {
      const auto& mats = mf.mod_mats();
      if (mats.empty()) throw InvalidSpecError("matrix file lists no matrices");
      Group g = special_linear_mod(mats[0].n, mats[0].q);
      std::vector<Elem> marking;
      for (const auto& m : mats) {
        if (m.n != mats[0].n) throw InvalidSpecError("matrix dimensions differ in file");
        marking.push_back(modmat_elem(m));
      }
      return {g, std::move(marking), spec};
    }
    const auto& mats = mf.laurent_mats();
    if (mats.empty()) throw InvalidSpecError("matrix file lists no matrices");
    Group g = special_linear_laurent(mats[0].n, mats[0].p);
    std::vector<Elem> marking;
    for (const auto& m : mats) {
      if (m.n != mats[0].n) throw InvalidSpecError("matrix dimensions differ in file");
      marking.push_back(laurent_elem(m));
    }
    return {g, std::move(marking), spec};
  }
  throw InvalidSpecError("unknown family spec: '" + spec + "'");
}

Ring make_ring(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts[0] == "z" && parts.size() == 1) return integer_ring();
  if (parts[0] == "zmod" && parts.size() == 2)
    return modular_ring(to_int(parts[1], "modulus"));
  if (parts[0] == "gf4") return gf4();
  if (parts[0] == "mat" && parts.size() >= 3) {
    int k = static_cast<int>(to_int(parts[1], "dimension"));
    std::string inner = spec.substr(spec.find(':', 4) + 1);
    return matrix_ring(make_ring(inner), k);
  }
  // short forms used by the CLI: z2, z3, ...
  if (parts[0].size() > 1 && parts[0][0] == 'z') {
    return modular_ring(to_int(parts[0].substr(1), "modulus"));
  }
  throw InvalidSpecError("unknown ring spec: '" + spec + "'");
}

Group make_finite_group(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts[0] == "s3") return symmetric_group(3);
  if (parts[0] == "v4") return direct_product(cyclic(2), cyclic(2));
  if (parts[0].size() > 1 && parts[0][0] == 'c')
    return cyclic(to_int(parts[0].substr(1), "cyclic order"));
  if (parts[0] == "table-file" && parts.size() >= 2) {
    std::string path = spec.substr(std::string("table-file:").size());
    std::ifstream in(path);
    if (!in) throw InvalidSpecError("cannot open table file: " + path);
    Json j = Json::parse(in);
    return table_group(j.at("table").get<std::vector<std::vector<int>>>(),
                       j.value("name", "file"));
  }
  throw InvalidSpecError("unknown finite group spec: '" + spec + "'");
}

namespace {

std::vector<RingElem> integer_samples() {
  std::vector<RingElem> out;
  for (std::int64_t v : {0, 1, -1, 2, -2, 3}) out.push_back(box<BigInt>(BigInt(v)));
  return out;
}

}  // namespace

System make_crossed_system(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "trivial" && parts.size() == 3) {
    return trivial_system(make_ring(parts[1]), make_finite_group(parts[2]));
  }
  if (kind == "twisted-sign") {
    // Z * C2 with tau(s, s) = -1: the square of the symbol is -1
    Ring r = integer_ring();
    Group g = cyclic(2);
    auto tau = [r, g](const Elem& x, const Elem& y) -> RingElem {
      bool both = !g.is_identity(x) && !g.is_identity(y);
      return both ? box<BigInt>(BigInt(-1)) : r.one();
    };
    return make_system(r, g, [](const Elem&) { return RingAut::identity(); }, tau,
                       integer_samples(), "twisted-sign");
  }
  if (kind == "frobenius") {
    // GF4 ⋊ C2 with the Frobenius action, trivial tau
    Ring r = gf4();
    Group g = cyclic(2);
    auto sigma = [g](const Elem& x) {
      if (g.is_identity(x)) return RingAut::identity();
      return RingAut("frobenius", gf4_frobenius, gf4_frobenius);
    };
    auto tau = [r](const Elem&, const Elem&) { return r.one(); };
    return make_system(r, g, sigma, tau, {}, "frobenius");
  }
  if (kind == "defect-normalization") {
    // planted defect: tau(e, s) = -1 breaks the normalization
    Ring r = integer_ring();
    Group g = cyclic(2);
    auto tau = [r, g](const Elem& x, const Elem& y) -> RingElem {
      if (g.is_identity(x) && !g.is_identity(y)) return box<BigInt>(BigInt(-1));
      return r.one();
    };
    return make_system(r, g, [](const Elem&) { return RingAut::identity(); }, tau,
                       integer_samples(), "defect-normalization");
  }
  if (kind == "defect-cocycle") {
    // planted defect: Frobenius action with tau(s, s) = w fails the cocycle
    // identity since w is not Frobenius-fixed
    Ring r = gf4();
    Group g = cyclic(2);
    auto sigma = [g](const Elem& x) {
      if (g.is_identity(x)) return RingAut::identity();
      return RingAut("frobenius", gf4_frobenius, gf4_frobenius);
    };
    auto tau = [r, g](const Elem& x, const Elem& y) -> RingElem {
      bool both = !g.is_identity(x) && !g.is_identity(y);
      return both ? *r.parse("w") : r.one();
    };
    return make_system(r, g, sigma, tau, {}, "defect-cocycle");
  }
  if (kind == "defect-sigma") {
    // planted defect: sigma(s) swaps 0 and 1 over Z/2, which is invertible
    // but not a ring homomorphism
    Ring r = modular_ring(2);
    Group g = cyclic(2);
    auto swap01 = [](const RingElem& v) {
      return box<std::int64_t>(1 - unbox<std::int64_t>(v));
    };
    auto sigma = [g, swap01](const Elem& x) {
      if (g.is_identity(x)) return RingAut::identity();
      return RingAut("swap01", swap01, swap01);
    };
    auto tau = [r](const Elem&, const Elem&) { return r.one(); };
    return make_system(r, g, sigma, tau, {}, "defect-sigma");
  }
  throw InvalidSpecError("unknown crossed system spec: '" + spec + "'");
}

System load_system_json(const Json& j) {
  Ring r = make_ring(j.at("ring").get<std::string>());
  Group g;
  if (j.at("group").is_string()) {
    g = make_finite_group(j.at("group").get<std::string>());
  } else {
    g = table_group(j.at("group").at("table").get<std::vector<std::vector<int>>>(),
                    j.at("group").value("name", "inline"));
  }
  auto relems = r.elements();
  if (!relems) throw InvalidSpecError("system files need a finite ring");
  auto gelems = g.elements();
  if (!gelems) throw InvalidSpecError("system files need a finite group");

  auto sigma_tables = j.at("sigma").get<std::vector<std::vector<int>>>();
  auto tau_table = j.at("tau").get<std::vector<std::vector<std::string>>>();
  if (sigma_tables.size() != gelems->size() || tau_table.size() != gelems->size())
    throw InvalidSpecError("sigma/tau tables must have one row per group element");

  auto ring_index = [r, relems](const RingElem& v) -> std::size_t {
    for (std::size_t i = 0; i < relems->size(); ++i)
      if (r.equal((*relems)[i], v)) return i;
    throw InvalidSpecError("ring element missing from the enumeration");
  };

  Group gcopy = g;
  auto gindex = [gcopy, gelems](const Elem& x) -> std::size_t {
    for (std::size_t i = 0; i < gelems->size(); ++i)
      if (gcopy.eq((*gelems)[i], x)) return i;
    throw InvalidSpecError("group element missing from the enumeration");
  };

  auto sigma = [=](const Elem& x) {
    std::vector<int> table = sigma_tables[gindex(x)];
    std::vector<int> inverse(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] < 0 || table[i] >= static_cast<int>(table.size()))
        throw InvalidSpecError("sigma table entry out of range");
      inverse[static_cast<std::size_t>(table[i])] = static_cast<int>(i);
    }
    auto fwd = [=](const RingElem& v) {
      return (*relems)[static_cast<std::size_t>(table[ring_index(v)])];
    };
    auto bwd = [=](const RingElem& v) {
      return (*relems)[static_cast<std::size_t>(inverse[ring_index(v)])];
    };
    return RingAut("table", fwd, bwd);
  };
  auto tau = [=](const Elem& x, const Elem& y) {
    const std::string& lit = tau_table[gindex(x)][gindex(y)];
    auto v = r.parse(lit);
    if (!v) throw InvalidSpecError("cannot parse tau literal '" + lit + "'");
    return *v;
  };
  return make_system(r, g, sigma, tau, {}, j.value("name", "file"));
}

QuotientChain load_chain_spec(const Json& j) {
  std::string family = j.at("family").get<std::string>();
  std::int64_t modulus = j.at("modulus").get<std::int64_t>();
  int length = j.at("length").get<int>();
  if (family == "z") return z_chain(modulus, length);
  if (family == "sanov") return sanov_chain(modulus, length);
  throw InvalidSpecError("unknown chain family: '" + family + "'");
}

// ---------------------------------------------------------------- reports

Json report_envelope(const std::string& command, const Json& config,
                     const ReportOptions& opts) {
  Json j;
  j["artifact"] = "mglab";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  j["seed"] = opts.seed;
  return j;
}

void attach_timing(Json& report, const ReportOptions& opts, double seconds) {
  if (opts.timings) report["timings"] = {{"seconds", seconds}};
}

Json ball_report(const std::string& family, int radius, const ReportOptions& opts) {
  MarkedGroup mg = make_family(family);
  CayleyBall b = ball(mg, radius, opts.caps);
  Json j;
  j["family"] = family;
  j["radius"] = radius;
  j["vertex_count"] = b.vertices.size();
  j["edge_count"] = b.edges.size();
  j["encoding_digest"] = ball_digest(b);
  return j;
}

std::string ball_adjacency(const std::string& family, int radius,
                           const ReportOptions& opts) {
  MarkedGroup mg = make_family(family);
  CayleyBall b = ball(mg, radius, opts.caps);
  std::ostringstream os;
  write_adjacency(os, b);
  return os.str();
}

Json distance_report(const std::string& family_a, const std::string& family_b, int cap,
                     const ReportOptions& opts) {
  MarkedGroup a = make_family(family_a);
  MarkedGroup b = make_family(family_b);
  DistanceBounds d = marked_distance(a, b, cap, opts.caps);
  Json j;
  j["family_a"] = family_a;
  j["family_b"] = family_b;
  j["cap"] = cap;
  j["valuation"] = d.valuation;
  j["at_least_cap"] = !d.exact;
  j["distance_lower"] = d.lower;
  j["distance_upper"] = d.upper;
  j["exact"] = d.exact;
  return j;
}

Json converge_report(const QuotientChain& chain, int rmax, int valuation_cap,
                     const ReportOptions& opts) {
  check_chain_invariants(chain);
  Json rows = Json::array();
  bool monotone = true;
  int prev = -1;
  bool all_reached = true;
  for (int R = 0; R <= rmax; ++R) {
    auto stage = convergence_radius(chain, R, opts.caps);
    Json row;
    row["R"] = R;
    if (stage) {
      row["stage"] = *stage;
      if (*stage < prev) monotone = false;
      prev = *stage;
    } else {
      row["stage"] = nullptr;
      all_reached = false;
    }
    rows.push_back(row);
  }
  Json j;
  j["kind"] = chain.kind;
  j["modulus"] = chain.modulus;
  j["stages"] = chain.length();
  j["rows"] = rows;
  j["monotone"] = monotone;
  j["all_reached"] = all_reached;
  if (valuation_cap > 0) {
    Json vals = Json::array();
    for (const ChainStage& st : chain.stages) {
      Valuation v = valuation(chain.base, st.mg, valuation_cap, opts.caps);
      vals.push_back({{"stage", st.label},
                      {"valuation", v.value},
                      {"at_least_cap", v.at_least_cap}});
    }
    j["valuations"] = vals;
  }
  return j;
}

namespace {

Json certificate_json(const TransferCertificate& c) {
  Json j;
  j["m"] = c.support_bound;
  j["radius"] = c.agreement_radius;
  j["stage"] = c.stage;
  j["verdict"] = c.verdict();
  j["base_check"] = c.base_confirms;
  return j;
}

// the unit -1 + t + t^4 of Z[C5] and its inverse -1 + t^2 + t^3; the
// coefficients survive in any coefficient ring
GroupRingElement c5_unit(const Ring& r, const Group& c5, bool inverse) {
  GroupRingElement e(r, c5);
  auto coeff_of = [&](std::int64_t v) { return v >= 0 ? r.one() : r.neg(r.one()); };
  if (!inverse) {
    e.add_term(cyclic_elem(c5, 0), coeff_of(-1));
    e.add_term(cyclic_elem(c5, 1), coeff_of(1));
    e.add_term(cyclic_elem(c5, 4), coeff_of(1));
  } else {
    e.add_term(cyclic_elem(c5, 0), coeff_of(-1));
    e.add_term(cyclic_elem(c5, 2), coeff_of(1));
    e.add_term(cyclic_elem(c5, 3), coeff_of(1));
  }
  return e;
}

}  // namespace

Json transfer_pair_report(const std::string& pair, const QuotientChain* chain,
                          const ReportOptions& opts) {
  Json j;
  j["pair"] = pair;
  if (pair == "t") {
    QuotientChain def = chain ? *chain : z_chain(3, 4);
    Ring r = integer_ring();
    GroupRingElement x = GroupRingElement::monomial(r, def.base.group, z_elem(1), r.one());
    GroupRingElement y = GroupRingElement::monomial(r, def.base.group, z_elem(-1), r.one());
    j["certificate"] = certificate_json(limit_transfer(x, y, def, opts.caps));
    j["chain"] = def.kind + ":" + std::to_string(def.modulus);
    return j;
  }
  if (pair == "c5") {
    Ring r = integer_ring();
    Group c5 = cyclic(5);
    MarkedGroup mg{c5, {cyclic_elem(c5, 1)}, "zmod:5"};
    QuotientChain self = self_chain(mg);
    GroupRingElement u = c5_unit(r, c5, false);
    GroupRingElement v = c5_unit(r, c5, true);
    j["certificate"] = certificate_json(limit_transfer(u, v, self, opts.caps));
    j["chain"] = "self";
    return j;
  }
  throw InvalidSpecError("unknown transfer pair preset: '" + pair + "'");
}

Json transfer_random_report(int count, const ReportOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  int confirmed = 0;
  int sound = 0;
  Json samples = Json::array();

  for (int i = 0; i < count; ++i) {
    // rotate over small finite bases and coefficient rings
    std::int64_t orders[] = {4, 5, 6};
    std::int64_t order = orders[i % 3];
    Ring r = (i % 2 == 0) ? integer_ring() : modular_ring(i % 4 == 1 ? 5 : 7);
    Group g = cyclic(order);
    MarkedGroup mg{g, {cyclic_elem(g, 1)}, "zmod:" + std::to_string(order)};

    // x = product of unit factors, y = reversed product of their inverses
    int factors = 1 + static_cast<int>(rng() % 3);
    GroupRingElement x = GroupRingElement::one(r, g);
    GroupRingElement y = GroupRingElement::one(r, g);
    for (int f = 0; f < factors; ++f) {
      bool special = (order == 5) && (rng() % 2 == 0);
      if (special) {
        x = gr_mul(x, c5_unit(r, g, false));
        y = gr_mul(c5_unit(r, g, true), y);
        continue;
      }
      std::int64_t power = static_cast<std::int64_t>(rng() % order);
      RingElem c = r.one();
      if (r.key() == "Z") {
        if (rng() % 2 == 0) c = r.neg(c);
      } else {
        // any nonzero residue is a unit of the prime modular rings used here
        auto all = *r.elements();
        c = all[1 + rng() % (all.size() - 1)];
      }
      x = gr_mul(x, GroupRingElement::monomial(r, g, cyclic_elem(g, power), c));
      y = gr_mul(GroupRingElement::monomial(r, g, cyclic_elem(g, -power), *r.try_inverse(c)),
                 y);
    }

    TransferCertificate cert = limit_transfer(x, y, self_chain(mg), opts.caps);
    if (cert.quotient_confirms) ++confirmed;
    if (cert.quotient_confirms == cert.base_confirms) ++sound;
    if (i < 3) {
      Json s = certificate_json(cert);
      s["x"] = x.str();
      s["ring"] = r.key();
      s["base"] = mg.label;
      samples.push_back(s);
    }
  }

  Json j;
  j["pairs"] = count;
  j["confirmed"] = confirmed;
  j["sound"] = sound;
  j["first_samples"] = samples;
  return j;
}

Json transfer_literal_report(const std::string& ring_spec, const QuotientChain& chain,
                             const std::string& x_literal, const std::string& y_literal,
                             const ReportOptions& opts) {
  Ring r = make_ring(ring_spec);
  GroupRingElement x = parse_group_ring_literal(r, chain.base, x_literal);
  GroupRingElement y = parse_group_ring_literal(r, chain.base, y_literal);
  Json j;
  j["x"] = x.str();
  j["y"] = y.str();
  j["ring"] = r.key();
  j["certificate"] = certificate_json(limit_transfer(x, y, chain, opts.caps));
  return j;
}

Json finiteness_report_json(const FinitenessReport& rep, const ReportOptions& opts) {
  Json j;
  j["ring"] = rep.ring_key;
  if (!rep.group_key.empty()) j["group"] = rep.group_key;
  j["element_count"] = rep.element_count;
  j["unit_count"] = rep.unit_count;
  j["pairs_checked"] = rep.pairs_checked;
  Json v = Json::array();
  for (const auto& [x, y] : rep.violations) v.push_back({{"x", x}, {"y", y}});
  j["violations"] = v;
  if (opts.timings) j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

Json df_report(const std::string& ring_spec, const std::string& group_spec,
               const ReportOptions& opts) {
  FinitenessReport rep =
      exhaustive_direct_finiteness(make_ring(ring_spec), make_finite_group(group_spec));
  return finiteness_report_json(rep, opts);
}

Json df_crossed_report(const std::string& system_spec, const ReportOptions& opts) {
  System sys = make_crossed_system(system_spec);
  sys->require_validated();
  FinitenessReport rep = direct_finiteness_scan(crossed_ring(sys));
  rep.group_key = sys->group().key();
  Json j = finiteness_report_json(rep, opts);
  j["system"] = system_spec;
  return j;
}

Json crossed_validate_report(const System& sys, const ReportOptions& opts) {
  (void)opts;
  const auto& violations = sys->validate();
  Json j;
  j["system"] = sys->name();
  j["valid"] = violations.empty();
  Json v = Json::array();
  for (const auto& viol : violations)
    v.push_back({{"identity", viol.identity}, {"detail", viol.detail}});
  j["violations"] = v;
  if (violations.empty()) j["class"] = crossed_class_name(classify(sys));
  return j;
}

Json crossed_decompose_report(const std::string& preset, const ReportOptions& opts) {
  (void)opts;
  if (preset != "z2s3-c3")
    throw InvalidSpecError("unknown decompose preset: '" + preset + "'");

  Ring r = modular_ring(2);
  Group s3 = symmetric_group(3);
  System sys = trivial_system(r, s3);
  sys->require_validated();

  // C3 inside S_3: the identity and the two 3-cycles
  std::vector<Elem> n_elems = {perm_elem({0, 1, 2}), perm_elem({1, 2, 0}),
                               perm_elem({2, 0, 1})};
  Decomposition dec = decompose(sys, n_elems);

  Ring ambient_ring = crossed_ring(sys);
  auto all = *ambient_ring.elements();

  std::uint64_t pairs = 0;
  std::uint64_t preserved = 0;
  std::uint64_t roundtrips = 0;
  for (const RingElem& pa : all) {
    CrossedElement u = crossed_value(pa);
    if (dec.from_quotient(dec.to_quotient(u)) == u) ++roundtrips;
    for (const RingElem& pb : all) {
      CrossedElement v = crossed_value(pb);
      ++pairs;
      CrossedElement lhs = dec.to_quotient(cp_mul(u, v));
      CrossedElement rhs = cp_mul(dec.to_quotient(u), dec.to_quotient(v));
      if (lhs == rhs) ++preserved;
    }
  }

  Json j;
  j["preset"] = preset;
  j["ambient"] = "Z/2[S3]";
  j["normal_subgroup"] = "C3";
  j["quotient_class"] = crossed_class_name(classify(dec.quotient_system));
  j["pairs_checked"] = pairs;
  j["pairs_preserved"] = preserved;
  j["roundtrips_ok"] = roundtrips;
  j["elements"] = all.size();
  Json t = Json::array();
  for (const Elem& rep : dec.transversal) t.push_back(s3.describe(rep));
  j["transversal"] = t;
  return j;
}

Json slnp_orders_report(int n, std::int64_t p, std::int64_t q_max,
                        const ReportOptions& opts) {
  (void)opts;
  Json rows = Json::array();
  bool all_orders_equal = true;
  bool all_subgroups_equal = true;
  bool all_gcd_one = true;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    if (gcd64(q, p) != 1) continue;
    OrderReport rep = verify_order_step(n, p, q);
    rows.push_back({{"q", q},
                    {"o_a", rep.o_a},
                    {"o_x", rep.o_x},
                    {"subgroup_equal", rep.subgroup_equal},
                    {"gcd_ox_p", rep.gcd_ox_p}});
    all_orders_equal = all_orders_equal && (rep.o_a == rep.o_x);
    all_subgroups_equal = all_subgroups_equal && rep.subgroup_equal;
    all_gcd_one = all_gcd_one && (rep.gcd_ox_p == 1);
  }
  GammaGenerators g = make_generators(n, p);
  Json j;
  j["n"] = n;
  j["p"] = p;
  j["q_max"] = q_max;
  j["rows"] = rows;
  j["all_orders_equal"] = all_orders_equal;
  j["all_subgroups_equal"] = all_subgroups_equal;
  j["all_gcd_one"] = all_gcd_one;
  j["x_pow_p_equals_a"] =
      laurent_mat_pow(g.x, static_cast<std::uint64_t>(p)) == g.a;
  j["sanov_scale_warning"] = g.sanov_scale_warning;
  return j;
}

std::string slnp_orders_csv(const Json& report) {
  std::ostringstream os;
  os << "q,o_a,o_x,equal,gcd\n";
  for (const Json& row : report.at("rows")) {
    os << row.at("q").get<std::int64_t>() << ',' << row.at("o_a").get<std::uint64_t>()
       << ',' << row.at("o_x").get<std::uint64_t>() << ','
       << (row.at("subgroup_equal").get<bool>() ? 1 : 0) << ','
       << row.at("gcd_ox_p").get<std::int64_t>() << '\n';
  }
  return os.str();
}

Json slnp_vanish_report(int n, std::int64_t p, std::int64_t q_max, int samples,
                        const ReportOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  Json rows = Json::array();
  int total_counterexamples = 0;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    if (!is_prime(q) || gcd64(q, p) != 1) continue;
    VanishReport rep = test_g_vanishing(n, p, q, samples, rng);
    rows.push_back({{"q", q},
                    {"samples", rep.samples_tested},
                    {"counterexamples", rep.counterexamples}});
    total_counterexamples += rep.counterexamples;
  }
  Json j;
  j["n"] = n;
  j["p"] = p;
  j["q_max"] = q_max;
  j["samples_per_q"] = samples;
  j["rows"] = rows;
  j["counterexamples"] = total_counterexamples;
  return j;
}

Json presentations_report(const Presentation& p, int r_min, int r_max,
                          const ReportOptions& opts) {
  (void)opts;
  std::int64_t def = presentation_deficiency(p);
  Json rows = Json::array();
  bool identities_hold = true;
  std::vector<std::int64_t> amalgam_defs;
  for (int r = r_min; r <= r_max; ++r) {
    Presentation am = amalgam_presentation(p, r);
    Presentation hn = hnn_presentation(p, r);
    std::int64_t am_def = presentation_deficiency(am);
    std::int64_t hn_def = presentation_deficiency(hn);
    identities_hold = identities_hold && (am_def == 2 * def - r) && (hn_def == def + 1 - r);
    amalgam_defs.push_back(am_def);
    rows.push_back({{"r", r},
                    {"amalgam_generators", am.generators.size()},
                    {"amalgam_relators", am.relators.size()},
                    {"amalgam_deficiency", am_def},
                    {"hnn_generators", hn.generators.size()},
                    {"hnn_relators", hn.relators.size()},
                    {"hnn_deficiency", hn_def}});
  }
  bool pairwise_distinct = true;
  for (std::size_t i = 0; i < amalgam_defs.size(); ++i)
    for (std::size_t j = i + 1; j < amalgam_defs.size(); ++j)
      if (amalgam_defs[i] == amalgam_defs[j]) pairwise_distinct = false;

  Json j;
  j["generators"] = p.generators.size();
  j["relators"] = p.relators.size();
  j["deficiency"] = def;
  j["rows"] = rows;
  j["identities_hold"] = identities_hold;
  j["amalgam_deficiencies_distinct"] = pairwise_distinct;
  return j;
}

Presentation toy_presentation(int generators, int relators) {
  if (generators < 2) throw InvalidSpecError("toy presentations need at least a and b");
  std::vector<std::string> names = {"a", "b"};
  for (int i = 2; i < generators; ++i) names.push_back(std::string(1, static_cast<char>('c' + i - 2)));
  std::vector<FreeWord> rels;
  for (int i = 0; i < relators; ++i) {
    // distinct nonempty reduced filler words
    FreeWord w = FreeWord::power(0, i + 2) * FreeWord::generator(1) *
                 FreeWord::power(0, -(i + 2)) * FreeWord::generator(1, -1);
    rels.push_back(w);
  }
  return make_presentation(std::move(names), std::move(rels));
}

}  // namespace mglab

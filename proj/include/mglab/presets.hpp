#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "mglab/crossed.hpp"
#include "mglab/group_ring.hpp"
#include "mglab/limits.hpp"
#include "mglab/marked.hpp"
#include "mglab/presentation.hpp"
#include "mglab/slnp.hpp"

namespace mglab {

using Json = nlohmann::json;

// ------------------------------------------------------------ registries
//
// family spec strings:
//   z | zmod:M | free:K | sanov | sanovmod:M | slnp:N:P | matrix-file:PATH
MarkedGroup make_family(const std::string& spec);

// ring spec strings: z | zmod:M | gf4 | mat:K:<ring>
Ring make_ring(const std::string& spec);

// finite group spec strings: c<M> | s3 | v4 | table-file:PATH
Group make_finite_group(const std::string& spec);

// crossed system presets: trivial:<ring>:<group> | twisted-sign | frobenius
// | defect-normalization | defect-cocycle | defect-sigma
System make_crossed_system(const std::string& spec);

// system description JSON: ring name, group (named or inline table), sigma
// as permutation tables over the ring enumeration, tau as ring literals
System load_system_json(const Json& j);

// chain spec: {"family": "z"|"sanov", "modulus": m, "length": L}
QuotientChain load_chain_spec(const Json& j);

// ------------------------------------------------------------- reports
//
// All report payloads are deterministic for a fixed config and seed;
// wall-clock timings are attached only on request so byte-identical reruns
// stay byte-identical.

struct ReportOptions {
  std::uint64_t seed = 0;
  bool timings = false;
  Caps caps;
};

Json report_envelope(const std::string& command, const Json& config,
                     const ReportOptions& opts);
void attach_timing(Json& report, const ReportOptions& opts, double seconds);

Json ball_report(const std::string& family, int radius, const ReportOptions& opts);
std::string ball_adjacency(const std::string& family, int radius, const ReportOptions& opts);

Json distance_report(const std::string& family_a, const std::string& family_b, int cap,
                     const ReportOptions& opts);

Json converge_report(const QuotientChain& chain, int rmax, int valuation_cap,
                     const ReportOptions& opts);

Json transfer_pair_report(const std::string& pair, const QuotientChain* chain,
                          const ReportOptions& opts);
Json transfer_random_report(int count, const ReportOptions& opts);
Json transfer_literal_report(const std::string& ring_spec, const QuotientChain& chain,
                             const std::string& x_literal, const std::string& y_literal,
                             const ReportOptions& opts);

Json finiteness_report_json(const FinitenessReport& rep, const ReportOptions& opts);
Json df_report(const std::string& ring_spec, const std::string& group_spec,
               const ReportOptions& opts);
Json df_crossed_report(const std::string& system_spec, const ReportOptions& opts);

Json crossed_validate_report(const System& sys, const ReportOptions& opts);
Json crossed_decompose_report(const std::string& preset, const ReportOptions& opts);

Json slnp_orders_report(int n, std::int64_t p, std::int64_t q_max,
                        const ReportOptions& opts);
std::string slnp_orders_csv(const Json& report);
Json slnp_vanish_report(int n, std::int64_t p, std::int64_t q_max, int samples,
                        const ReportOptions& opts);

Json presentations_report(const Presentation& p, int r_min, int r_max,
                          const ReportOptions& opts);

// toy presentation with the named generator count and free-reducible filler
// relators, always containing generators a and b
Presentation toy_presentation(int generators, int relators);

}  // namespace mglab

/// \file serialize.hpp
/// \brief JSON encodings of terms, transition systems and check reports.
///
/// Terms use a canonical tagged form, e.g.
///
///     {"kind":"prefix","action":{"name":"a","co":false},"body":{"kind":"nil"}}
///
/// and `term_to_json(term_from_json(j))` reproduces any canonical `j`
/// byte for byte once dumped.

#ifndef CCS_SERIALIZE_HPP
#define CCS_SERIALIZE_HPP

#include <json.hpp>

#include "ccs/congruence.hpp"
#include "ccs/klop.hpp"
#include "ccs/laws.hpp"

namespace ccs {

using Json = nlohmann::ordered_json;

Json action_to_json(const Action& u);
Action action_from_json(const Json& j);

Json term_to_json(const Process& p);
/// Throws Error on anything that is not a canonical term encoding.
Process term_from_json(const Json& j);

/// {"states":[...],"roots":[...],"complete":b,"edges":[{"source","action","target"}]}
Json lts_to_json(const Lts& lts);
/// The LTS plus "eps" (per state) and "weak_edges".
Json saturated_to_json(const SaturatedLts& sat);

/// {"related","kind","witness"|null,"states","classes"}
Json verdict_to_json(const Verdict& v);
Json law_report_to_json(const LawReport& r);
Json deng_to_json(const DengOutcome& d);
Json hennessy_to_json(const HennessyOutcome& h);
Json congruence_to_json(const CongruenceReport& r);
Json klop_witness_to_json(const KlopWitness& w);
Json coarsest_to_json(const CoarsestDecision& d);
Json crosscheck_to_json(const CrosscheckReport& r);

}  // namespace ccs

#endif  // CCS_SERIALIZE_HPP

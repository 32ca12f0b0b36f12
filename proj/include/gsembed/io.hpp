#ifndef GSEMBED_IO_HPP_
#define GSEMBED_IO_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsembed/embed.hpp"
#include "gsembed/gset.hpp"
#include "gsembed/hset.hpp"
#include "gsembed/oracle.hpp"

namespace gsembed {

using json = nlohmann::json;

/// A parsed instance file: one group acting on two G-sets.
///
/// The group is given either as a Cayley table ("order" + "table") or by
/// generator pairs ("generators": [{"on_M": perm, "on_X": perm}, ...]); the
/// generator form builds the image in Sym(M) x Sym(X).  When both appear
/// the table is authoritative.  M and X carry "size", an "action" table
/// (omitted in the generator form) and optional "labels".
struct Instance {
  GroupPtr group;
  GSet m;
  GSet x;
};

Instance parse_instance(const json& j);
Instance load_instance(const std::string& path);

// HSet JSON form: atom = integer, set = array of member forms in canonical
// order.  Parsing accepts unnormalized arrays and canonicalizes.
json hset_to_json(const HSet& h);
HSet hset_from_json(const json& j, int atom_bound);

json certificate_to_json(const EmbeddingCertificate& cert, const GSet& x);
EmbeddingCertificate certificate_from_json(const json& j, const GSet& m,
                                           const GSet& x);

json condition_report_to_json(const ConditionReport& report);
json verify_report_to_json(const VerifyReport& report);
json oracle_report_to_json(const OracleReport& report);
json theorem_check_to_json(const TheoremCheck& record);
json power_to_json(const PowerGSet& p);

/// Serialization used everywhere a file or stdout is produced: 2-space
/// indent, sorted keys, trailing newline.  Byte-identical for equal values.
std::string dump_json(const json& j);

}  // namespace gsembed

#endif  // GSEMBED_IO_HPP_

#pragma once

// JSON encodings of groups, elements, sets and certificates, and the
// search-free certificate checker behind `regent verify`.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Rank-one vectors are bare integers, rank-d vectors are arrays.
// Field elements are three "p/q" strings (c0, c1, c2).
//
// Groups:
//   {"kind":"cone","d":1,"P":[[60]]}
//   {"kind":"discrete","d":1}
//   {"kind":"divisibility","poly":[7,1,-1,1]}     coefficients low to high

#include "regent/entailment.hpp"
#include "regent/forcing.hpp"
#include "regent/regularisation.hpp"

#include <json.hpp>

#include <stdexcept>

namespace regent {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const GroupDescriptor& g, const Json& j);

Json subset_to_json(const FinSubset& s);
FinSubset subset_from_json(const GroupDescriptor& g, const Json& j);

std::vector<GroupElement> elements_from_json(const GroupDescriptor& g, const Json& j);

/// Rejects keys outside `allowed`.
void require_keys(const Json& object, std::initializer_list<const char*> allowed, const char* where);

// Certificates. Each is self-contained: group, base system and claim.

Json t_certificate_json(const GroupDescriptor& g, const std::string& system, const FinSubset& a,
                        const ChainCertificate& cert);
Json u_certificate_json(const GroupDescriptor& g, const std::string& system, const FinSubset& a, const GroupElement& x,
                        const UCertificate& cert);
Json lorenzen_certificate_json(const GroupDescriptor& g, const std::string& system, const LorenzenCertificate& cert);
Json prufer_certificate_json(const GroupDescriptor& g, const std::string& system, const PruferCertificate& cert);
Json cone_certificate_json(const GroupDescriptor& g, const FinSubset& a, const ConeDecision& d);

/// Adds the original entailment claim A |- B to a certificate about A - B.
Json with_claim(Json certificate, const FinSubset& a, const FinSubset& b);

struct VerifyResult {
  bool valid = false;
  std::string message;
};

/// Replays a certificate against the base modules only. Throws ParseError
/// when the document does not follow the schema.
VerifyResult verify_certificate(const Json& certificate);

}  // namespace regent

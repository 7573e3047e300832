#pragma once

// JSON file formats. Every integer is written as a decimal string; readers
// also accept plain JSON integers.
//
//   family:       {"kind":"vertical"} | {"kind":"fibonacci"}
//                 | {"kind":"finite","elements":[["1","0"],["3","1"],...]}
//   generators:   [["1","0"],["1","1"],...] or {"generators":[...]}
//   certificate:  {"version":"nonfg-cert/1","family":...,"generators":[...],
//                  "beta":{"numerator":"2","denominator":"1"},
//                  "witness":["1","3"],"witness_in_family_index":"3",
//                  "created_from":[...] or null}

#include <string>

#include "json.hpp"
#include "monosub/lambda_families.hpp"
#include "monosub/monoid.hpp"
#include "monosub/nonfg.hpp"

namespace monosub {

using Json = nlohmann::ordered_json;

Json family_to_json(const LambdaFamily& fam);
/// Throws ParseError on malformed input, InvalidFamily if (1,0) is missing.
LambdaFamily family_from_json(const Json& j);
LambdaFamily parse_family(const std::string& text);

GeneratorSet generators_from_json(const Json& j);
GeneratorSet parse_generators(const std::string& text);

Json certificate_to_json(const Certificate& cert);
/// Byte-stable rendering: two-space indentation and a trailing newline.
std::string serialize_certificate(const Certificate& cert);

/// Throws ParseError for malformed JSON or fields and UnsupportedVersion for
/// an unknown or missing version tag.
Certificate certificate_from_json(const Json& j);
Certificate parse_certificate(const std::string& text);

/// Verifies certificate text. Bad JSON and unknown versions throw (they are
/// input errors); undecodable fields inside a well-formed document become a
/// failed "decode" check.
VerificationReport verify_certificate_text(const std::string& text, const VerifyOptions& opts = {});

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace monosub

#include "monosub/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monosub/errors.hpp"

namespace monosub {

namespace {

Json integer_json(const BigInt& v) { return v.str(); }

BigInt integer_from_json(const Json& j, const char* what) {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    }
    throw ParseError(std::string(what) + ": expected a decimal integer string");
}

Json pair_json(const ExponentPair& p) { return Json::array({integer_json(p.a()), integer_json(p.b())}); }

ExponentPair pair_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + ": expected a pair [a, b]");
    BigInt a = integer_from_json(j[0], what);
    BigInt b = integer_from_json(j[1], what);
    if (a < 1 || b < 0) {
        throw ParseError(std::string(what) + ": pair (" + a.str() + "," + b.str() + ") needs a >= 1 and b >= 0");
    }
    return ExponentPair(std::move(a), std::move(b));
}

std::vector<ExponentPair> pairs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of pairs");
    std::vector<ExponentPair> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(pair_from_json(e, what));
    return out;
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void require_version(const Json& j) {
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    auto it = j.find("version");
    if (it == j.end() || !it->is_string() || it->get<std::string>() != kCertificateVersion) {
        throw UnsupportedVersion("unsupported certificate version");
    }
}

}  // namespace

Json family_to_json(const LambdaFamily& fam) {
    Json j;
    j["kind"] = to_string(fam.kind());
    if (fam.is_finite()) {
        Json els = Json::array();
        for (const auto& e : fam.elements()) els.push_back(pair_json(e));
        j["elements"] = std::move(els);
    }
    return j;
}

LambdaFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("family must be a JSON object");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("family kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "vertical") return LambdaFamily::vertical();
    if (k == "fibonacci") return LambdaFamily::fibonacci();
    if (k == "finite") return LambdaFamily::finite(pairs_from_json(field(j, "elements"), "family elements"));
    throw ParseError("unknown family kind '" + k + "'");
}

LambdaFamily parse_family(const std::string& text) { return family_from_json(parse_json(text)); }

GeneratorSet generators_from_json(const Json& j) {
    const Json& list = j.is_object() ? field(j, "generators") : j;
    std::vector<ExponentPair> gens = pairs_from_json(list, "generators");
    if (gens.empty()) throw ParseError("generator list is empty");
    return GeneratorSet(std::move(gens));
}

GeneratorSet parse_generators(const std::string& text) { return generators_from_json(parse_json(text)); }

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["version"] = kCertificateVersion;
    j["family"] = family_to_json(cert.family);
    Json gens = Json::array();
    for (const auto& g : cert.generators) gens.push_back(pair_json(g));
    j["generators"] = std::move(gens);
    j["beta"] = Json{{"numerator", integer_json(cert.beta.numerator())},
                     {"denominator", integer_json(cert.beta.denominator())}};
    j["witness"] = pair_json(cert.witness);
    j["witness_in_family_index"] = integer_json(cert.witness_in_family_index);
    if (cert.created_from) {
        j["created_from"] = *cert.created_from;
    } else {
        j["created_from"] = nullptr;
    }
    return j;
}

std::string serialize_certificate(const Certificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

Certificate certificate_from_json(const Json& j) {
    require_version(j);
    LambdaFamily fam = family_from_json(field(j, "family"));

    std::vector<ExponentPair> gens = pairs_from_json(field(j, "generators"), "generators");
    if (gens.empty()) throw ParseError("generators: list is empty");
    if (!std::is_sorted(gens.begin(), gens.end()) ||
        std::adjacent_find(gens.begin(), gens.end()) != gens.end()) {
        throw ParseError("generators: list must be strictly increasing in (a,b)");
    }

    const Json& beta = field(j, "beta");
    if (!beta.is_object()) throw ParseError("beta: expected {\"numerator\",\"denominator\"}");
    BigInt num = integer_from_json(field(beta, "numerator"), "beta numerator");
    BigInt den = integer_from_json(field(beta, "denominator"), "beta denominator");
    if (num < 0 || den < 1) throw ParseError("beta: needs numerator >= 0 and denominator >= 1");

    ExponentPair witness = pair_from_json(field(j, "witness"), "witness");
    BigInt index = integer_from_json(field(j, "witness_in_family_index"), "witness_in_family_index");
    if (index < 0) throw ParseError("witness_in_family_index must be nonnegative");

    std::optional<std::vector<std::string>> created_from;
    auto it = j.find("created_from");
    if (it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError("created_from: expected an array of strings or null");
        std::vector<std::string> sources;
        for (const auto& s : *it) {
            if (!s.is_string()) throw ParseError("created_from: expected strings");
            sources.push_back(s.get<std::string>());
        }
        created_from = std::move(sources);
    }
    return Certificate{std::move(fam),     GeneratorSet(std::move(gens)), Slope(std::move(num), std::move(den)),
                       std::move(witness), std::move(index),              std::move(created_from)};
}

Certificate parse_certificate(const std::string& text) { return certificate_from_json(parse_json(text)); }

VerificationReport verify_certificate_text(const std::string& text, const VerifyOptions& opts) {
    Json j = parse_json(text);
    require_version(j);
    try {
        return verify_certificate(certificate_from_json(j), opts);
    } catch (const ParseError& e) {
        VerificationReport report;
        report.record("decode", false, e.what());
        return report;
    } catch (const InvalidFamily& e) {
        VerificationReport report;
        report.record("decode", false, e.what());
        return report;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace monosub

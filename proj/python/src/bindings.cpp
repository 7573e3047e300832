#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monosub/errors.hpp"
#include "monosub/io.hpp"
#include "monosub/nonfg.hpp"
#include "monosub/polynomials.hpp"

namespace py = pybind11;
using namespace monosub;

// Python int <-> cpp_int through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        value = parse_bigint(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using PyPair = std::pair<BigInt, BigInt>;

ExponentPair to_pair(const PyPair& p) { return ExponentPair(p.first, p.second); }
PyPair from_pair(const ExponentPair& p) { return {p.a(), p.b()}; }
PyPair from_degree(const Degree& d) { return {d.a, d.b}; }
PyPair from_slope(const Slope& s) { return {s.numerator(), s.denominator()}; }

std::vector<PyPair> from_pairs(const std::vector<ExponentPair>& v) {
    std::vector<PyPair> out;
    for (const auto& p : v) out.push_back(from_pair(p));
    return out;
}

GeneratorSet to_generators(const std::vector<PyPair>& v) {
    std::vector<ExponentPair> gens;
    for (const auto& p : v) gens.push_back(to_pair(p));
    return GeneratorSet(std::move(gens));
}

std::vector<std::pair<PyPair, std::uint64_t>> factors_of(const Factorization& f) {
    std::vector<std::pair<PyPair, std::uint64_t>> out;
    for (const auto& factor : f.factors()) out.emplace_back(from_pair(factor.generator), factor.count);
    return out;
}

py::dict mstar_dict(const MStarResult& r) {
    py::dict d;
    d["inside"] = r.inside;
    d["generating_monomials"] = from_pairs(r.generating_monomials);
    py::list terms;
    for (const auto& t : r.factorizations) terms.append(py::make_tuple(from_degree(t.term), factors_of(t.factorization)));
    d["factorizations"] = terms;
    py::list failing;
    for (const auto& t : r.failing_terms) failing.append(from_degree(t));
    d["failing_terms"] = failing;
    return d;
}

template <CoefficientRing Ring>
std::vector<SparsePoly<Ring>> parse_all(const std::vector<std::string>& texts, const Ring& ring) {
    std::vector<SparsePoly<Ring>> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["passed"] = r.passed;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["passed"] = c.passed;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monomial subalgebras of R[x,y]: membership and non-finite-generation certificates";

    auto base = py::register_exception<Error>(m, "MonosubError");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<InvalidFamily>(m, "InvalidFamily", base);
    py::register_exception<InvalidGenerators>(m, "InvalidGenerators", base);
    py::register_exception<NoSuchElement>(m, "NoSuchElement", base);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", base);
    py::register_exception<SearchSpaceTooLarge>(m, "SearchSpaceTooLarge", base);
    py::register_exception<TheoremNotApplicable>(m, "TheoremNotApplicable", base);
    py::register_exception<UnsupportedVersion>(m, "UnsupportedVersion", base);
    py::register_exception<NotInSubalgebra>(m, "NotInSubalgebra", base);

    m.def("fibonacci", &fibonacci, py::arg("n"), "Fibonacci number with f(-1) = 1, f(0) = 0.");
    m.def(
        "compare_slopes",
        [](const PyPair& s, const PyPair& t) {
            auto c = compare_slopes(Slope(s.first, s.second), Slope(t.first, t.second));
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        },
        py::arg("s"), py::arg("t"), "Compare slopes given as (numerator, denominator); returns -1, 0 or 1.");

    py::class_<LambdaFamily>(m, "Family")
        .def_static("vertical", &LambdaFamily::vertical)
        .def_static("fibonacci", &LambdaFamily::fibonacci)
        .def_static("finite",
                    [](const std::vector<PyPair>& els) {
                        std::vector<ExponentPair> v;
                        for (const auto& p : els) v.push_back(to_pair(p));
                        return LambdaFamily::finite(std::move(v));
                    })
        .def_static("from_json", &parse_family)
        .def("to_json", [](const LambdaFamily& f) { return family_to_json(f).dump(); })
        .def_property_readonly("kind", [](const LambdaFamily& f) { return to_string(f.kind()); })
        .def_property_readonly("elements", [](const LambdaFamily& f) { return from_pairs(f.elements()); })
        .def("enumerate", [](const LambdaFamily& f, std::size_t k) { return from_pairs(enumerate(f, k)); },
             py::arg("k"))
        .def("elements_within",
             [](const LambdaFamily& f, const BigInt& a, const BigInt& b) { return from_pairs(elements_within(f, a, b)); },
             py::arg("max_a"), py::arg("max_b"))
        .def(
            "exceed_slope",
            [](const LambdaFamily& f, const PyPair& beta) {
                IndexedElement e = first_exceeding(f, Slope(beta.first, beta.second));
                return py::make_tuple(e.index, from_pair(e.element));
            },
            py::arg("beta"), "First element with slope above beta, as (index, (a, b)).")
        .def("contains", [](const LambdaFamily& f, const PyPair& p) { return f.contains(to_pair(p)); })
        .def("hypothesis_check",
             [](const LambdaFamily& f) {
                 HypothesisReport h = hypothesis_check(f);
                 py::dict d;
                 d["contains_origin_generator"] = h.contains_origin_generator;
                 d["sup_is_attained"] = to_string(h.sup_is_attained);
                 d["strict_inequality_holds"] = to_string(h.strict_inequality_holds);
                 d["theorem_applies"] = h.theorem_applies;
                 return d;
             })
        .def("__eq__", [](const LambdaFamily& a, const LambdaFamily& b) { return a == b; })
        .def("__repr__", [](const LambdaFamily& f) { return "Family(" + family_to_json(f).dump() + ")"; });

    m.def(
        "member",
        [](const std::vector<PyPair>& gens, const PyPair& target) -> std::optional<std::vector<std::pair<PyPair, std::uint64_t>>> {
            auto f = member(to_generators(gens), Degree(target.first, target.second));
            if (!f) return std::nullopt;
            return factors_of(*f);
        },
        py::arg("generators"), py::arg("target"),
        "Canonical factorization of target as [((a, b), count), ...], or None.");
    m.def(
        "factorizations",
        [](const std::vector<PyPair>& gens, const PyPair& target, std::size_t limit) {
            std::vector<std::vector<std::pair<PyPair, std::uint64_t>>> out;
            for (const auto& f : factorizations(to_generators(gens), Degree(target.first, target.second), limit)) {
                out.push_back(factors_of(f));
            }
            return out;
        },
        py::arg("generators"), py::arg("target"), py::arg("limit") = 10);
    m.def(
        "member_bruteforce",
        [](const std::vector<PyPair>& gens, const PyPair& target) {
            return member_bruteforce(to_generators(gens), Degree(target.first, target.second));
        },
        py::arg("generators"), py::arg("target"));
    m.def(
        "max_slope", [](const std::vector<PyPair>& gens) { return from_slope(max_slope(to_generators(gens))); },
        py::arg("generators"));

    m.def(
        "in_subalgebra",
        [](const std::string& poly, const LambdaFamily& fam, std::optional<BigInt> modulus) {
            if (modulus) return mstar_dict(in_subalgebra(parse_polynomial(poly, ModularRing(*modulus)), fam));
            return mstar_dict(in_subalgebra(parse_polynomial<IntegerRing>(poly), fam));
        },
        py::arg("poly"), py::arg("family"), py::arg("modulus") = py::none());
    m.def(
        "extract_mstar",
        [](const std::vector<std::string>& polys, const LambdaFamily& fam, std::optional<BigInt> modulus) {
            if (modulus) return from_pairs(extract_mstar(parse_all(polys, ModularRing(*modulus)), fam).generators());
            return from_pairs(extract_mstar(parse_all(polys, IntegerRing{}), fam).generators());
        },
        py::arg("polys"), py::arg("family"), py::arg("modulus") = py::none());

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("family", [](const Certificate& c) { return c.family; })
        .def_property_readonly("generators", [](const Certificate& c) { return from_pairs(c.generators.generators()); })
        .def_property_readonly("beta", [](const Certificate& c) { return from_slope(c.beta); })
        .def_property_readonly("witness", [](const Certificate& c) { return from_pair(c.witness); })
        .def_property_readonly("witness_in_family_index", [](const Certificate& c) { return c.witness_in_family_index; })
        .def_property_readonly("created_from", [](const Certificate& c) { return c.created_from; })
        .def("to_json", &serialize_certificate)
        .def_static("from_json", &parse_certificate)
        .def(
            "verify", [](const Certificate& c, bool deep) { return report_dict(verify_certificate(c, VerifyOptions{deep})); },
            py::arg("deep") = false)
        .def("__eq__", [](const Certificate& a, const Certificate& b) { return a == b; });

    m.def(
        "construct_witness",
        [](const LambdaFamily& fam, const std::vector<std::string>& polys, std::optional<BigInt> modulus) {
            if (modulus) return construct_witness(fam, parse_all(polys, ModularRing(*modulus)));
            return construct_witness(fam, parse_all(polys, IntegerRing{}));
        },
        py::arg("family"), py::arg("polys"), py::arg("modulus") = py::none());
    m.def(
        "construct_witness_from_generators",
        [](const LambdaFamily& fam, const std::vector<PyPair>& gens) {
            return construct_witness_from_generators(fam, to_generators(gens));
        },
        py::arg("family"), py::arg("generators"));
    m.def("escalation_chain", &escalation_chain, py::arg("family"), py::arg("k"));
    m.def(
        "verify_certificate_text",
        [](const std::string& text, bool deep) { return report_dict(verify_certificate_text(text, VerifyOptions{deep})); },
        py::arg("text"), py::arg("deep") = false);
}

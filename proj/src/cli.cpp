#include "monosub/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "monosub/errors.hpp"
#include "monosub/io.hpp"
#include "monosub/nonfg.hpp"
#include "monosub/polynomials.hpp"

namespace monosub::cli {

namespace {

struct Config {
    std::string family_file;
    std::string generators_file;
    std::string polys_file;
    std::string cert_file;
    std::string out_file;
    std::string target;
    std::string modulus;
    std::size_t count = 10;
    std::size_t limit = 10;
    bool all = false;
    bool deep = false;
};

std::vector<std::string> polynomial_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

Degree parse_target(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("target must be written A,B");
    BigInt a = parse_bigint(text.substr(0, comma));
    BigInt b = parse_bigint(text.substr(comma + 1));
    if (a < 0 || b < 0) throw ParseError("target exponents must be nonnegative");
    return Degree{std::move(a), std::move(b)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << content;
}

void print_certificate_summary(const Certificate& cert, std::ostream& out) {
    out << "generators:";
    for (const auto& g : cert.generators) out << ' ' << g;
    out << "\nbeta=" << cert.beta << "\nwitness=" << cert.witness << " index=" << cert.witness_in_family_index
        << " slope=" << slope_of(cert.witness) << "\n";
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
    LambdaFamily fam = parse_family(read_file(cfg.family_file));
    for (const auto& e : enumerate(fam, cfg.count)) out << e << " slope=" << slope_of(e) << "\n";
    return kAffirmative;
}

int cmd_membership(const Config& cfg, std::ostream& out) {
    GeneratorSet gens = parse_generators(read_file(cfg.generators_file));
    Degree target = parse_target(cfg.target);
    std::vector<Factorization> found = factorizations(gens, target, cfg.all ? cfg.limit : 1);
    if (found.empty()) {
        out << "not-a-member\n";
        return kNegative;
    }
    out << "member\n";
    for (const auto& f : found) out << "  " << to_string(f) << "\n";
    return kAffirmative;
}

template <CoefficientRing Ring>
Certificate witness_from_polys(const LambdaFamily& fam, const std::string& text, const Ring& ring) {
    std::vector<SparsePoly<Ring>> polys;
    for (const auto& line : polynomial_lines(text)) polys.push_back(parse_polynomial(line, ring));
    return construct_witness(fam, polys);
}

int cmd_witness(const Config& cfg, std::ostream& out) {
    LambdaFamily fam = parse_family(read_file(cfg.family_file));
    std::optional<Certificate> cert;
    if (!cfg.generators_file.empty()) {
        cert = construct_witness_from_generators(fam, parse_generators(read_file(cfg.generators_file)));
    } else if (cfg.modulus.empty()) {
        cert = witness_from_polys(fam, read_file(cfg.polys_file), IntegerRing{});
    } else {
        cert = witness_from_polys(fam, read_file(cfg.polys_file), ModularRing(parse_bigint(cfg.modulus)));
    }
    print_certificate_summary(*cert, out);
    if (!cfg.out_file.empty()) {
        write_file(cfg.out_file, serialize_certificate(*cert));
        out << "wrote " << cfg.out_file << "\n";
    }
    return kAffirmative;
}

int cmd_chain(const Config& cfg, std::ostream& out) {
    LambdaFamily fam = parse_family(read_file(cfg.family_file));
    std::vector<Certificate> chain = escalation_chain(fam, cfg.count);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Certificate& c = chain[i];
        out << "first " << i + 1 << ": beta=" << c.beta << " witness=" << c.witness << " index="
            << c.witness_in_family_index << " verify=" << (verify_certificate(c).passed ? "pass" : "fail") << "\n";
    }
    return kAffirmative;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    VerificationReport report = verify_certificate_text(read_file(cfg.cert_file), VerifyOptions{cfg.deep});
    out << (report.passed ? "pass" : "fail") << "\n";
    for (const auto& c : report.checks) {
        out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    return report.passed ? kAffirmative : kNegative;
}

template <CoefficientRing Ring>
int report_polys(const LambdaFamily& fam, const std::string& text, const Ring& ring, std::ostream& out) {
    std::vector<std::string> lines = polynomial_lines(text);
    if (lines.empty()) throw ParseError("no polynomial given");
    bool all_inside = true;
    for (const auto& line : lines) {
        SparsePoly<Ring> f = parse_polynomial(line, ring);
        MStarResult r = in_subalgebra(f, fam);
        all_inside = all_inside && r.inside;
        out << to_string(f) << "\n";
        if (r.inside) {
            out << "  inside\n  M*(f):";
            if (r.generating_monomials.empty()) out << " (none)";
            for (const auto& g : r.generating_monomials) out << ' ' << g;
            out << "\n";
            for (const auto& t : r.factorizations) out << "  " << t.term << " = " << to_string(t.factorization) << "\n";
        } else {
            out << "  not inside\n";
            for (const auto& t : r.failing_terms) out << "  obstruction " << t << "\n";
        }
    }
    return all_inside ? kAffirmative : kNegative;
}

int cmd_poly(const Config& cfg, std::ostream& out) {
    LambdaFamily fam = parse_family(read_file(cfg.family_file));
    std::string text = read_file(cfg.polys_file);
    if (cfg.modulus.empty()) return report_polys(fam, text, IntegerRing{}, out);
    return report_polys(fam, text, ModularRing(parse_bigint(cfg.modulus)), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monomial subalgebras of R[x,y]: membership and non-finite-generation certificates", "monosub"};
    app.require_subcommand(1, 1);
    Config cfg;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the first elements of a family with their slopes");
    enumerate_cmd->add_option("family", cfg.family_file, "Family JSON file")->required();
    enumerate_cmd->add_option("-k,--count", cfg.count, "Number of elements")->check(CLI::PositiveNumber);

    auto* membership_cmd = app.add_subcommand("membership", "Decide whether A,B is a sum of generators");
    membership_cmd->add_option("generators", cfg.generators_file, "Generators JSON file")->required();
    membership_cmd->add_option("target", cfg.target, "Target exponent as A,B")->required();
    membership_cmd->add_flag("--all", cfg.all, "List factorizations up to --limit");
    membership_cmd->add_option("--limit", cfg.limit, "Maximum number of factorizations")->check(CLI::PositiveNumber);

    auto* witness_cmd = app.add_subcommand("witness", "Build a non-finite-generation certificate");
    witness_cmd->add_option("family", cfg.family_file, "Family JSON file")->required();
    auto* gens_opt = witness_cmd->add_option("--gens", cfg.generators_file, "Generators JSON file");
    auto* polys_opt = witness_cmd->add_option("--polys", cfg.polys_file, "Polynomials, one per line");
    gens_opt->excludes(polys_opt);
    witness_cmd->add_option("--mod", cfg.modulus, "Coefficients modulo m (with --polys)");
    witness_cmd->add_option("--out", cfg.out_file, "Write the certificate JSON here");

    auto* chain_cmd = app.add_subcommand("chain", "Certificates against each prefix of the family");
    chain_cmd->add_option("family", cfg.family_file, "Family JSON file")->required();
    chain_cmd->add_option("-k,--count", cfg.count, "Chain length")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
    verify_cmd->add_option("certificate", cfg.cert_file, "Certificate JSON file")->required();
    verify_cmd->add_flag("--deep", cfg.deep, "Also rerun the membership search on the witness");

    auto* poly_cmd = app.add_subcommand("poly", "Test polynomials for membership in R[M(Lambda)]");
    poly_cmd->add_option("family", cfg.family_file, "Family JSON file")->required();
    poly_cmd->add_option("polys", cfg.polys_file, "Polynomials, one per line")->required();
    poly_cmd->add_option("--mod", cfg.modulus, "Coefficients modulo m");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAffirmative;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kAffirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*enumerate_cmd) return cmd_enumerate(cfg, out);
        if (*membership_cmd) return cmd_membership(cfg, out);
        if (*witness_cmd) {
            if (cfg.generators_file.empty() == cfg.polys_file.empty()) {
                throw ParseError("witness needs exactly one of --gens or --polys");
            }
            return cmd_witness(cfg, out);
        }
        if (*chain_cmd) return cmd_chain(cfg, out);
        if (*verify_cmd) return cmd_verify(cfg, out);
        if (*poly_cmd) return cmd_poly(cfg, out);
    } catch (const TheoremNotApplicable& e) {
        err << e.what() << "\n";
        return kNotApplicable;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace monosub::cli

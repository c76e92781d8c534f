// Command-line front end: generates certificates of cyclic two-factorizations,
// verifies externally supplied ones, and expands them into full factor lists.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hwp/certificate.hpp"
#include "hwp/completion.hpp"
#include "hwp/errors.hpp"
#include "hwp/skolem.hpp"
#include "hwp/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hwp::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hwp::Error("cannot write '" + path + "'");
    out << payload;
}

void print_report(const hwp::CoverageReport& rep, const std::string& what) {
    std::cerr << what << ": " << (rep.ok ? "ok" : "FAILED") << '\n';
    if (rep.ok) return;
    std::cerr << "  missing: " << rep.missing.size()
              << "  duplicated: " << rep.duplicated.size()
              << "  structural: " << rep.transversality_failures.size() << '\n';
    std::size_t shown = 0;
    for (const auto& [a, b] : rep.missing) {
        if (shown++ >= 8) break;
        std::cerr << "  missing (" << a << "," << b << ")\n";
    }
    shown = 0;
    for (const auto& [a, b] : rep.duplicated) {
        if (shown++ >= 8) break;
        std::cerr << "  duplicated (" << a << "," << b << ")\n";
    }
    for (const auto& msg : rep.transversality_failures) std::cerr << "  " << msg << '\n';
}

// returns the exit status for the verification level run on the base set
int run_verification(const hwp::BaseCycleSet& base, const std::string& level,
                     hwp::VerificationSummary* summary) {
    hwp::CoverageReport base_rep = hwp::check_base(base);
    print_report(base_rep, "base-cycle check");
    if (summary) {
        summary->level = level;
        summary->ok = base_rep.ok;
        summary->checked_differences = 1LL * base.params.v - 1;
    }
    if (!base_rep.ok) return kExitVerifyFailed;
    if (level == "full") {
        hwp::Factorization fact = hwp::develop(base);
        hwp::CoverageReport fact_rep = hwp::check_factorization(fact, base.params);
        print_report(fact_rep, "factorization check");
        if (summary) {
            summary->ok = fact_rep.ok;
            summary->checked_edges = 1LL * base.params.v * (base.params.v - 1) / 2;
        }
        if (!fact_rep.ok) return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_generate(int ell, int n, const std::string& verify_level,
                 const std::string& format, const std::string& output, bool emit_maps) {
    hwp::Params params = hwp::make_params(ell, n);
    hwp::BaseCycleSet base = hwp::assemble(params);
    hwp::Certificate cert = hwp::make_certificate(base, emit_maps);

    int status = kExitOk;
    if (verify_level != "none") {
        hwp::VerificationSummary summary;
        status = run_verification(base, verify_level, &summary);
        cert.verification = summary;
    }
    auto fmt = format == "text" ? hwp::CertFormat::Text : hwp::CertFormat::Json;
    write_output(output, hwp::serialize(cert, fmt));
    return status;
}

int cmd_verify(const std::string& input, const std::string& level) {
    hwp::Certificate cert = hwp::deserialize(read_file(input));
    hwp::BaseCycleSet base = hwp::to_base_cycle_set(cert);
    return run_verification(base, level, nullptr);
}

int cmd_skolem(int order) {
    hwp::SkolemSeq seq = hwp::generate_skolem(order);
    std::cout << "order " << seq.order << ' '
              << (seq.flavor == hwp::SkolemFlavor::Ordinary ? "ordinary" : "hooked") << '\n';
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << seq.entries[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_develop(const std::string& input, int factor_index, const std::string& output) {
    hwp::Certificate cert = hwp::deserialize(read_file(input));
    hwp::BaseCycleSet base = hwp::to_base_cycle_set(cert);
    hwp::CoverageReport rep = hwp::check_base(base);
    if (!rep.ok) {
        print_report(rep, "base-cycle check");
        return kExitVerifyFailed;
    }
    hwp::Factorization fact = hwp::develop(base);

    std::ostringstream os;
    auto emit = [&](int i) {
        const hwp::FactorRef& r = fact.ref(i);
        os << "factor " << i << " type "
           << (r.type == hwp::FactorType::ShortCycles ? "[ell^M]" : "[M^ell]") << '\n';
        for (const hwp::LiftedCycle& c : fact.factor(i)) {
            hwp::LiftedCycle canon = hwp::canonical_form(c);
            for (std::size_t j = 0; j < canon.size(); ++j) {
                if (j) os << ' ';
                os << canon[j].a << ',' << canon[j].b;
            }
            os << '\n';
        }
    };
    if (factor_index >= 0) {
        if (factor_index >= fact.size())
            throw hwp::IndexOutOfRange("factor index out of range (have " +
                                       std::to_string(fact.size()) + ")");
        emit(factor_index);
    } else {
        os << "factors " << fact.size() << '\n';
        for (int i = 0; i < fact.size(); ++i) emit(i);
    }
    write_output(output, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generator and verifier for cyclic two-factorization certificates"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "construct a base-cycle certificate");
    int ell = 0, n = 0;
    std::string verify_level = "base", format = "json", output = "-";
    bool emit_maps = false;
    gen->add_option("--ell", ell, "short cycle length (1 mod 4, >= 9)")->required();
    gen->add_option("--n", n, "number of short base cycles")->required();
    gen->add_option("--verify", verify_level, "none|base|full")
        ->check(CLI::IsMember({"none", "base", "full"}));
    gen->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    gen->add_option("--output", output, "output path ('-' for stdout)");
    gen->add_flag("--emit-maps", emit_maps, "include the sign-map tables");

    auto* ver = app.add_subcommand("verify", "verify a certificate file");
    std::string input, level = "base";
    ver->add_option("--input", input, "certificate path")->required();
    ver->add_option("--level", level, "base|full")->check(CLI::IsMember({"base", "full"}));

    auto* sko = app.add_subcommand("skolem", "emit the Skolem sequence of an order");
    int order = 0;
    sko->add_option("--order", order, "sequence order (>= 1)")->required();

    auto* dev = app.add_subcommand("develop", "expand a certificate into factors");
    std::string dev_input, dev_output = "-";
    int factor_index = -1;
    dev->add_option("--input", dev_input, "certificate path")->required();
    dev->add_option("--factor-index", factor_index, "emit a single factor");
    dev->add_option("--output", dev_output, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
        if (*gen) return cmd_generate(ell, n, verify_level, format, output, emit_maps);
        if (*ver) return cmd_verify(input, level);
        if (*sko) return cmd_skolem(order);
        if (*dev) return cmd_develop(dev_input, factor_index, dev_output);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitBadInput : kExitBadInput;
    } catch (const hwp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const hwp::SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const hwp::EllNotSupported& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const hwp::NTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const hwp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

// Command-line surface for the setpart library: parse and classify
// partitions, apply phi/psi, peel atomic factors, enumerate Pi_n, run the
// census, and verify the bijection exhaustively.
//
// Exit codes: 0 success, 1 verification counterexample, 2 parse error,
// 3 domain error, 4 enumeration cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <setpart/setpart.hpp>

namespace {

using namespace setpart;

int exit_code_for(errc code) {
    switch (code) {
        case errc::empty_partition:
        case errc::empty_block:
        case errc::duplicate_element:
        case errc::non_positive:
        case errc::bad_text:
            return 2;
        case errc::empty_result:
        case errc::not_based_at_one:
        case errc::domain_error:
            return 3;
        case errc::cap_exceeded:
            return 4;
    }
    return 2;
}

// PARTITION_MAX_N overrides the enumeration cap.
int resolve_cap() {
    const char* raw = std::getenv("PARTITION_MAX_N");
    if (!raw) return kDefaultMaxN;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        fail(errc::bad_text, std::string("PARTITION_MAX_N must be a positive integer, got '") +
                                 raw + "'");
    return static_cast<int>(value);
}

int cmd_classify(const std::string& text) {
    const SetPartition p = SetPartition::from_text(text);
    std::cout << p.to_text() << '\t' << to_label(classify(p).label()) << '\n';
    return 0;
}

int cmd_map(const std::string& text, bool verbose, bool forward) {
    const SetPartition p = SetPartition::from_text(text);
    const BijectionResult result = forward ? phi(p) : psi(p);
    std::cout << result.image.to_text() << '\n';
    if (verbose) std::cout << result.witness.to_text() << '\n';
    return 0;
}

int cmd_factor(const std::string& text) {
    for (const SetPartition& factor : atomic_factorization(SetPartition::from_text(text)))
        std::cout << factor.to_text() << '\n';
    return 0;
}

int cmd_enumerate(int n, const std::string& filter, int cap) {
    std::optional<PartitionClass> wanted;
    if (filter == "both") wanted = PartitionClass::both;
    else if (filter == "atomic-only") wanted = PartitionClass::atomic_only;
    else if (filter == "unsplitable-only") wanted = PartitionClass::unsplitable_only;
    else if (filter == "neither") wanted = PartitionClass::neither;

    partition_stream stream(n, cap);
    while (auto p = stream.next())
        if (!wanted || classify(*p).label() == *wanted) std::cout << p->to_text() << '\n';
    return 0;
}

int check_max_n(int max_n, int cap) {
    if (max_n < 1) fail(errc::non_positive, "--max-n must be >= 1");
    if (max_n > cap)
        fail(errc::cap_exceeded, "--max-n " + std::to_string(max_n) + " exceeds cap " +
                                     std::to_string(cap) + " (override with PARTITION_MAX_N)");
    return max_n;
}

int cmd_census(int max_n, bool as_json, int threads, int cap) {
    check_max_n(max_n, cap);
    for (int n = 1; n <= max_n; ++n) {
        const CensusRow row = census(n, CensusOptions{threads, 0}, cap);
        if (as_json) {
            nlohmann::ordered_json record{{"n", row.n},
                                          {"bell", row.total},
                                          {"both", row.count_both},
                                          {"atomic_only", row.count_atomic_only},
                                          {"unsplitable_only", row.count_unsplitable_only},
                                          {"neither", row.count_neither},
                                          {"bijection_ok", row.bijection_ok}};
            std::cout << record.dump() << '\n';
        } else {
            std::cout << row.n << '\t' << row.total << '\t' << row.count_both << '\t'
                      << row.count_atomic_only << '\t' << row.count_unsplitable_only << '\t'
                      << row.count_neither << '\t' << (row.bijection_ok ? "true" : "false")
                      << '\n';
        }
    }
    return 0;
}

int cmd_verify(int max_n, int cap) {
    check_max_n(max_n, cap);
    for (int n = 1; n <= max_n; ++n) {
        const VerifyReport report = verify_bijection(n, cap);
        if (!report.ok()) {
            std::cout << "n=" << n << " FAIL: " << report.counterexample << '\n';
            return 1;
        }
        std::cout << "n=" << n << " bell=" << report.total << " both=" << report.count_both
                  << " atomic_only=" << report.count_atomic_only
                  << " unsplitable_only=" << report.count_unsplitable_only
                  << " neither=" << report.count_neither << " ok\n";
    }
    std::cout << "verify: all checks passed for n = 1.." << max_n << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-partition combinatorics: slash/split products, atomic and unsplitable "
                 "partitions, and the bijection between them"};
    app.require_subcommand(1);

    std::string text;
    bool verbose = false;
    int n = 0;
    int max_n = 0;
    std::string filter = "all";
    bool as_json = false;
    int threads = 0;

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a partition");
    classify_cmd->add_option("partition", text, "partition text, e.g. \"1 3|2\"")->required();

    CLI::App* phi_cmd = app.add_subcommand("phi", "map an ATOMIC_ONLY partition to US_n\\A_n");
    phi_cmd->add_option("partition", text)->required();
    phi_cmd->add_flag("-v,--verbose", verbose, "also print the witness indices");

    CLI::App* psi_cmd = app.add_subcommand("psi", "map an UNSPLITABLE_ONLY partition to A_n\\US_n");
    psi_cmd->add_option("partition", text)->required();
    psi_cmd->add_flag("-v,--verbose", verbose, "also print the witness indices");

    CLI::App* factor_cmd = app.add_subcommand("factor", "print the atomic factorization");
    factor_cmd->add_option("partition", text)->required();

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list all partitions of [n]");
    enum_cmd->add_option("n", n, "ground set size")->required();
    enum_cmd->add_option("--filter", filter, "class filter")
        ->check(CLI::IsMember({"all", "both", "atomic-only", "unsplitable-only", "neither"}));

    CLI::App* census_cmd = app.add_subcommand("census", "per-n class counts for n = 1..N");
    census_cmd->add_option("--max-n", max_n, "largest n")->required();
    census_cmd->add_flag("--json", as_json, "one JSON record per row");
    census_cmd->add_option("--threads", threads, "worker threads (0: all cores)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustively verify the bijection");
    verify_cmd->add_option("--max-n", max_n, "largest n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const int cap = resolve_cap();
        if (classify_cmd->parsed()) return cmd_classify(text);
        if (phi_cmd->parsed()) return cmd_map(text, verbose, true);
        if (psi_cmd->parsed()) return cmd_map(text, verbose, false);
        if (factor_cmd->parsed()) return cmd_factor(text);
        if (enum_cmd->parsed()) return cmd_enumerate(n, filter, cap);
        if (census_cmd->parsed()) return cmd_census(max_n, as_json, threads, cap);
        if (verify_cmd->parsed()) return cmd_verify(max_n, cap);
    } catch (const partition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "pms/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"pmsverify: exact verification suites for a Picard modular surface"};
    app.require_subcommand(1);

    std::string target;
    std::string scenario_path;
    std::string out_path;
    int truncation = -1;

    CLI::App* verify = app.add_subcommand("verify", "run one suite or all of them");
    verify->add_option("target", target, "suite name or 'all'")->required();
    verify->add_option("--scenario", scenario_path, "path to a scenario JSON file");
    verify->add_option("--out", out_path, "path for the JSON report");
    verify->add_option("--truncation", truncation, "truncation bound for boundary modules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        /* CLI11 returns 0 for --help; anything else is a usage error. */
        return code == 0 ? 0 : 2;
    }

    try {
        pms::Scenario sc;
        if (!scenario_path.empty()) sc = pms::load_scenario_file(scenario_path);
        if (truncation >= 0) sc.truncation_bound = truncation;
        if (!out_path.empty()) sc.out = out_path;

        pms::RunResult rr = pms::run_scenario(sc, target);
        std::string report = pms::render_report(sc, rr);

        std::ofstream out(sc.out, std::ios::binary);
        if (!out) {
            std::cerr << "pmsverify: cannot write report to " << sc.out << "\n";
            return 2;
        }
        out << report;
        out.close();

        std::cout << "pass " << rr.pass << ", bounded " << rr.bounded << ", fail " << rr.fail
                  << "; report written to " << sc.out << "\n";
        if (rr.fail > 0) {
            for (const auto& sr : rr.suites)
                for (const auto& c : sr.checks)
                    if (c.status == pms::CheckStatus::Fail)
                        std::cout << "FAIL " << c.id << "\n";
        }
        return rr.exit_code();
    } catch (const pms::ParseError& e) {
        std::cerr << "pmsverify: " << e.what() << "\n";
        return 2;
    } catch (const pms::UnknownSuite& e) {
        std::cerr << "pmsverify: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pmsverify: internal error: " << e.what() << "\n";
        return 2;
    }
}

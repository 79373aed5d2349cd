// Acceptance gate: one line per criterion on stdout, timings on stderr,
// exit 0 only when every criterion passes.  Each criterion must both hold
// exactly and finish inside its pinned wall-clock budget.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kirillov/verify.hpp"

#ifndef KIRILLOV_CLI_PATH
#error "KIRILLOV_CLI_PATH must point at the command line binary"
#endif

namespace {

using kirillov::CheckResult;

// Budgets in seconds, indexed by criterion id - 1.  Criterion 9 has no
// stated bound of its own; it inherits the harness timeout.
constexpr double budget[9] = {1.0, 5.0, 5.0, 10.0, 30.0, 30.0, 120.0, 30.0, 600.0};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool run_criterion(int id, const std::function<CheckResult()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    try {
        c = body();
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    bool in_budget = dt < budget[id - 1];
    bool pass = c.pass && in_budget;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (";
    if (!c.name.empty()) std::cout << c.name << ": ";
    std::cout << c.detail;
    if (!in_budget)
        std::cout << "; took " << dt << " s, budget " << budget[id - 1] << " s";
    std::cout << ")\n";
    std::cerr << "criterion " << id << ": " << dt << " s (budget " << budget[id - 1] << " s)\n";
    return pass;
}

CheckResult determinism_check(const kirillov::Config& cfg) {
    CheckResult c{9, "determinism", false, ""};

    std::string in_process[2];
    for (auto& rep : in_process) {
        std::ostringstream os;
        kirillov::render_verify_text(kirillov::run_verify_all(cfg), os);
        rep = os.str();
    }
    if (in_process[0] != in_process[1]) {
        c.detail = "two in-process reports differ";
        return c;
    }

    namespace fs = std::filesystem;
    std::string spawned[2];
    for (int i = 0; i < 2; ++i) {
        fs::path out = fs::temp_directory_path() /
                       ("kirillov-verify-" + std::to_string(i + 1) + ".txt");
        std::string cmd = std::string("\"") + KIRILLOV_CLI_PATH + "\" verify-all > \"" +
                          out.string() + "\" 2>/dev/null";
        if (std::system(cmd.c_str()) != 0) {
            c.detail = "spawned run " + std::to_string(i + 1) + " exited nonzero";
            return c;
        }
        spawned[i] = slurp(out);
        fs::remove(out);
    }
    if (spawned[0] != spawned[1]) {
        c.detail = "two spawned reports differ";
        return c;
    }
    if (spawned[0] != in_process[0]) {
        c.detail = "spawned report differs from the in-process report";
        return c;
    }
    if (in_process[0].find("verify-all: PASS") == std::string::npos) {
        c.detail = "reports agree but the suite itself failed";
        return c;
    }
    c.pass = true;
    c.detail = "4 reports byte-identical, " + std::to_string(in_process[0].size()) + " bytes";
    return c;
}

} // namespace

int main() {
    using namespace kirillov;
    Config cfg;

    VerifyContext ctx;
    try {
        ctx = load_corpus(cfg);
    } catch (const std::exception& e) {
        for (int id = 1; id <= 9; ++id)
            std::cout << "criterion " << id << ": FAIL (cannot load corpus: " << e.what()
                      << ")\n";
        return 1;
    }

    bool all = true;
    all &= run_criterion(1, [&] { return check_ch_components(ctx, cfg); });
    all &= run_criterion(2, [&] { return check_ch_associativity(ctx, cfg); });
    all &= run_criterion(3, [&] { return check_matrix_oracle(ctx, cfg); });
    all &= run_criterion(4, [&] { return check_group_correspondences(ctx, cfg); });
    all &= run_criterion(5, [&] { return check_polarizations(ctx, cfg); });
    all &= run_criterion(6, [&] { return check_orbit_identities_all(ctx, cfg); });
    all &= run_criterion(7, [&] { return check_kirillov_audits(ctx, cfg); });
    all &= run_criterion(8, [&] { return check_orbit_constancy(ctx, cfg); });
    all &= run_criterion(9, [&] { return determinism_check(cfg); });
    return all ? 0 : 1;
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "poncelet/families.hpp"
#include "poncelet/loci.hpp"

namespace poncelet::cli {

enum ExitCode : int {
    kOk = 0,
    kInvariantFailure = 1,
    kBadParameters = 2,
    kIoError = 3,
    kNoSolution = 4,
};

enum class Command { Verify, Locus, Family, Caustic };

struct RunConfig {
    Command command = Command::Verify;
    FamilyKind family = FamilyKind::Incircle;
    bool family_given = false;
    double a = 2.0;
    double b = 1.0;
    int n = 3;
    int tau = 1;
    int samples = 1000;
    double tol = 1e-9;
    double param = 0.0;
    std::vector<double> ratios;
    LocusSpace space = LocusSpace::Cosine;
    std::string out_path = "-";
    std::string svg_path;
};

/// Parse argv and run the selected subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_locus(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_caustic(const RunConfig& config, std::ostream& out, std::ostream& err);

struct LocusBlock {
    FamilyKind family;
    double a_over_b;
    std::vector<LocusSample> samples;
};

/// Header plus one row per sample, 17 significant digits, empty cells for
/// residuals that do not apply.
void write_locus_csv(std::ostream& os, const std::vector<LocusBlock>& blocks);

/// One closed stroke-only path per block in the (u, v) plane.
void write_locus_svg(std::ostream& os, const std::vector<LocusBlock>& blocks);

}  // namespace poncelet::cli

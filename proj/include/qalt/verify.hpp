#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qalt/corpus.hpp"
#include "qalt/laurent.hpp"
#include "qalt/numeric.hpp"
#include "qalt/qa.hpp"

namespace qalt {

struct RunConfig {
    std::string corpus_path;
    int max_crossings = 64;
    std::uint64_t budget = 1000000;
    int workers = 1;
    std::string format = "json";  // json | csv
    std::string out_path;
    bool anchor_locked = true;  // trefoil orientation anchor; locked in CI
    bool run_qa = true;
};

enum class Verdict { Pass, Fail, Skipped };
struct Check {
    Verdict v = Verdict::Skipped;
    std::string reason;
};
inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

struct OrientationRow {
    Orientation o;
    std::string bits;  // '+'/'-' per component
    int sigma = 0;
    bool sigma_ok = false;  // connected diagrams only
    Laurent jones_poly;
    std::optional<Rat> logderiv;  // V'(-1)/V(-1), det > 0 only
    std::optional<Rat> lambda_mullins;
    std::optional<Rat> tau;  // -(1/12) V'(-1)/V(-1)
    std::optional<Rat> d_cert;
};

// Reduced Goeritz matrix of the coloring backing the lattice path.
struct GoeritzExport {
    int coloring_id = 0;
    int size = 0;
    std::vector<Int> matrix_row_major;
};

// Spin-class data of the definite lattice: representative characteristic
// vectors, their d-values, and the lexicographically smallest maximizers.
struct LatticeExport {
    std::vector<Int> gram_row_major;
    int rank = 0;
    std::vector<std::vector<Int>> spin_reps;
    std::vector<Rat> spin_d;
    std::vector<std::vector<Int>> spin_maximizers;
};

struct InvariantReport {
    std::string name;
    int n_crossings = 0;
    int n_components = 0;
    bool connected = false;
    bool alternating = false;
    Int determinant = 0;
    std::vector<OrientationRow> rows;
    std::optional<std::vector<Rat>> spin_d;  // sorted, definite coloring only
    std::optional<std::vector<Rat>> lens_d;  // sorted, 2-bridge entries
    std::optional<Rat> lambda_lens;
    std::optional<GoeritzExport> goeritz_form;
    std::optional<LatticeExport> lattice_data;
    bool certified = false;
    bool budget_hit = false;
    QACertificate cert;
    std::map<std::string, Check> checks;
};

// Full per-link pipeline: polynomial, signature, lattice, certificate and
// the cross-checks the verification commands aggregate.
InvariantReport analyze_link(const CorpusEntry& entry, const RunConfig& cfg);

std::vector<CorpusEntry> load_corpus_sorted(const RunConfig& cfg);
std::vector<InvariantReport> analyze_corpus(const std::vector<CorpusEntry>& entries,
                                            const RunConfig& cfg);

std::string render_report(const std::vector<InvariantReport>& reports, const std::string& format);

// CLI entry points; return process exit codes (0 ok, 2 verification
// failure, 3 resource limit).
int cmd_invariants(const RunConfig& cfg, const std::string& link, std::ostream& os);
int cmd_verify_theorem(const RunConfig& cfg, std::ostream& os);
int cmd_verify_corollary(const RunConfig& cfg, std::ostream& os);
int cmd_qa_cert(const RunConfig& cfg, const std::string& link, std::ostream& os);
int cmd_report(const RunConfig& cfg, std::ostream& status);

// key=value configuration file; keys override the current values
// (documented: the file wins over flags).
void apply_config_file(RunConfig& cfg, const std::string& path);

std::string orientation_bits(const Orientation& o);

} // namespace qalt

#pragma once

/**
 * @file commands.hpp
 * @brief Command-line surface: eval, table, verify, deriv.
 *
 * Each command writes to caller-supplied streams and returns the process
 * exit code, so the whole surface can be driven in-process from tests.
 *
 * Exit codes: 0 success, 1 verification value mismatch, 2 usage error.
 */

#include "lorentzint/exactnum.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lorentzint {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class EvalMethod { oracle, paper, corrected, quadrature };
enum class TableFormat { csv, json, markdown };
enum class ReportFormat { json, markdown };

enum class VerifyStatus { agree, sign_mismatch, value_mismatch };

std::string_view to_string(VerifyStatus status);
VerifyStatus verify_status_from_string(std::string_view text);

/// agree if equal, sign_mismatch if candidate == -truth != 0, else value_mismatch.
VerifyStatus classify(const PiRational& candidate, const PiRational& truth);

struct VerificationEntry {
    unsigned m = 0;
    unsigned n = 0;
    PiRational oracle;
    PiRational paper_formula;
    std::optional<PiRational> corrected;     ///< even m+n only
    std::optional<double> quadrature;        ///< absent beyond the float-safety bound
    std::optional<std::string> quadrature_error;
    VerifyStatus status = VerifyStatus::agree;

    friend bool operator==(const VerificationEntry&, const VerificationEntry&) = default;
};

struct VerificationReport {
    unsigned range_max = 0;
    double rel_tol = 1e-10;
    std::vector<VerificationEntry> entries;

    std::map<VerifyStatus, std::size_t> summary() const;
    /// 0 when every odd entry agrees and every even entry agrees up to sign.
    int exit_code() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// All pairs m >= n with m+n <= range_max, ordered by m+n then n.
std::vector<std::pair<unsigned, unsigned>> index_pairs(unsigned range_max);

VerificationReport build_report(unsigned range_max, double rel_tol = 1e-10);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& value);
std::string render_report(const VerificationReport& report, ReportFormat format);

/// 15 significant digits.
std::string decimal_string(const PiRational& value);

int cmd_eval(unsigned m, unsigned n, EvalMethod method, RenderFormat format, std::ostream& out,
             std::ostream& err);
int cmd_table(unsigned max_sum, TableFormat format, std::ostream& out);
int cmd_verify(unsigned max_sum, double rel_tol, ReportFormat format, std::ostream& out);
int cmd_deriv(unsigned n, RenderFormat format, std::ostream& out);

/// Full argument parsing and dispatch; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentzint

#include "lorentzint/commands.hpp"

#include "lorentzint/closedform.hpp"
#include "lorentzint/derivkernel.hpp"
#include "lorentzint/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "CLI11.hpp"

#ifndef LORENTZINT_VERSION
#define LORENTZINT_VERSION "unknown"
#endif

namespace lorentzint {

namespace {

std::string format_double(double value, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
    return buffer;
}

PiRational paper_value(unsigned m, unsigned n)
{
    return (m + n) % 2 == 0 ? even_case_paper(m, n) : odd_case(m, n);
}

PiRational corrected_value(unsigned m, unsigned n)
{
    // The odd-case sum is not in question, so both methods share it.
    return (m + n) % 2 == 0 ? even_case_corrected(m, n) : odd_case(m, n);
}

}  // namespace

std::string_view to_string(VerifyStatus status)
{
    switch (status) {
    case VerifyStatus::agree: return "agree";
    case VerifyStatus::sign_mismatch: return "sign_mismatch";
    case VerifyStatus::value_mismatch: return "value_mismatch";
    }
    return "value_mismatch";
}

VerifyStatus verify_status_from_string(std::string_view text)
{
    for (auto s : {VerifyStatus::agree, VerifyStatus::sign_mismatch, VerifyStatus::value_mismatch})
        if (to_string(s) == text)
            return s;
    throw ParseError("unknown status: " + std::string(text));
}

VerifyStatus classify(const PiRational& candidate, const PiRational& truth)
{
    if (candidate == truth)
        return VerifyStatus::agree;
    if (candidate == -truth)
        return VerifyStatus::sign_mismatch;
    return VerifyStatus::value_mismatch;
}

std::map<VerifyStatus, std::size_t> VerificationReport::summary() const
{
    std::map<VerifyStatus, std::size_t> counts{
        {VerifyStatus::agree, 0}, {VerifyStatus::sign_mismatch, 0}, {VerifyStatus::value_mismatch, 0}};
    for (const auto& e : entries)
        ++counts[e.status];
    return counts;
}

int VerificationReport::exit_code() const
{
    for (const auto& e : entries) {
        const bool even = (e.m + e.n) % 2 == 0;
        if (e.status == VerifyStatus::value_mismatch || (!even && e.status != VerifyStatus::agree))
            return kExitMismatch;
    }
    return kExitOk;
}

std::vector<std::pair<unsigned, unsigned>> index_pairs(unsigned range_max)
{
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned sum = 0; sum <= range_max; ++sum)
        for (unsigned n = 0; n <= sum / 2; ++n)
            pairs.emplace_back(sum - n, n);
    return pairs;
}

VerificationReport build_report(unsigned range_max, double rel_tol)
{
    VerificationReport report;
    report.range_max = range_max;
    report.rel_tol = rel_tol;
    for (auto [m, n] : index_pairs(range_max)) {
        VerificationEntry e;
        e.m = m;
        e.n = n;
        e.oracle = integral_exact(m, n);
        e.paper_formula = paper_value(m, n);
        if ((m + n) % 2 == 0)
            e.corrected = even_case_corrected(m, n);
        if (m <= kDefaultFloatSafetyBound && n <= kDefaultFloatSafetyBound) {
            try {
                e.quadrature = quadrature(m, n, rel_tol).value;
            } catch (const NonConvergenceError& ex) {
                e.quadrature_error = ex.what();
            }
        }
        e.status = classify(e.paper_formula, e.oracle);
        report.entries.push_back(std::move(e));
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json row{
            {"m", e.m},
            {"n", e.n},
            {"oracle", to_json(e.oracle)},
            {"paper_formula", to_json(e.paper_formula)},
            {"corrected", e.corrected ? to_json(*e.corrected) : nlohmann::json(nullptr)},
            {"quadrature", e.quadrature ? nlohmann::json(*e.quadrature) : nlohmann::json(nullptr)},
            {"status", std::string(to_string(e.status))},
        };
        if (e.quadrature_error)
            row["quadrature_error"] = *e.quadrature_error;
        entries.push_back(std::move(row));
    }
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& [status, count] : report.summary())
        summary[std::string(to_string(status))] = count;
    return {
        {"version", LORENTZINT_VERSION},
        {"range_max", report.range_max},
        {"rel_tol", report.rel_tol},
        {"entries", std::move(entries)},
        {"summary", std::move(summary)},
    };
}

VerificationReport report_from_json(const nlohmann::json& value)
{
    try {
        VerificationReport report;
        report.range_max = value.at("range_max").get<unsigned>();
        report.rel_tol = value.at("rel_tol").get<double>();
        for (const auto& row : value.at("entries")) {
            VerificationEntry e;
            e.m = row.at("m").get<unsigned>();
            e.n = row.at("n").get<unsigned>();
            e.oracle = pi_rational_from_json(row.at("oracle"));
            e.paper_formula = pi_rational_from_json(row.at("paper_formula"));
            if (!row.at("corrected").is_null())
                e.corrected = pi_rational_from_json(row.at("corrected"));
            if (!row.at("quadrature").is_null())
                e.quadrature = row.at("quadrature").get<double>();
            if (row.contains("quadrature_error"))
                e.quadrature_error = row.at("quadrature_error").get<std::string>();
            e.status = verify_status_from_string(row.at("status").get<std::string>());
            report.entries.push_back(std::move(e));
        }
        return report;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed report: ") + ex.what());
    }
}

std::string render_report(const VerificationReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return to_json(report).dump(2) + "\n";

    std::string out = "# Verification report (m+n <= " + std::to_string(report.range_max) + ")\n\n";
    out += "| m | n | oracle | paper formula | corrected | quadrature | status |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto& e : report.entries) {
        out += "| " + std::to_string(e.m) + " | " + std::to_string(e.n) + " | " + render(e.oracle) +
               " | " + render(e.paper_formula) + " | " + (e.corrected ? render(*e.corrected) : "-") +
               " | " + (e.quadrature ? format_double(*e.quadrature, 15) : e.quadrature_error ? "failed" : "-") +
               " | " + std::string(to_string(e.status)) + " |\n";
    }
    out += "\n";
    for (const auto& [status, count] : report.summary())
        out += "- " + std::string(to_string(status)) + ": " + std::to_string(count) + "\n";
    return out;
}

std::string decimal_string(const PiRational& value)
{
    try {
        return format_double(to_float(value), 15);
    } catch (const OverflowError&) {
        return "overflow";
    }
}

int cmd_eval(unsigned m, unsigned n, EvalMethod method, RenderFormat format, std::ostream& out,
             std::ostream& err)
{
    if (method == EvalMethod::quadrature) {
        QuadratureResult q;
        try {
            q = quadrature(m, n, 1e-10);
        } catch (const OrderTooLargeError& ex) {
            err << "error: " << ex.what() << "\n";
            return kExitUsage;
        } catch (const NonConvergenceError& ex) {
            err << "error: " << ex.what() << "\n";
            return kExitMismatch;
        }
        if (format == RenderFormat::json) {
            out << nlohmann::json{{"value", q.value},
                                  {"abs_error_estimate", q.abs_error_estimate},
                                  {"evaluations", q.evaluations},
                                  {"converged", q.converged}}
                       .dump()
                << "\n";
        } else {
            out << format_double(q.value, 17) << "\n";
        }
        return kExitOk;
    }

    PiRational value;
    switch (method) {
    case EvalMethod::oracle: value = integral_exact(m, n); break;
    case EvalMethod::paper: value = paper_value(m, n); break;
    case EvalMethod::corrected: value = corrected_value(m, n); break;
    case EvalMethod::quadrature: break;
    }
    out << render(value, format) << "\n";
    return kExitOk;
}

int cmd_table(unsigned max_sum, TableFormat format, std::ostream& out)
{
    const auto pairs = index_pairs(max_sum);
    switch (format) {
    case TableFormat::csv:
        out << "m,n,exact,decimal\n";
        for (auto [m, n] : pairs) {
            const auto v = integral_exact(m, n);
            out << m << "," << n << "," << render(v) << "," << decimal_string(v) << "\n";
        }
        break;
    case TableFormat::markdown:
        out << "| m | n | exact | decimal |\n|---|---|---|---|\n";
        for (auto [m, n] : pairs) {
            const auto v = integral_exact(m, n);
            out << "| " << m << " | " << n << " | " << render(v) << " | " << decimal_string(v) << " |\n";
        }
        break;
    case TableFormat::json: {
        nlohmann::json rows = nlohmann::json::array();
        for (auto [m, n] : pairs) {
            const auto v = integral_exact(m, n);
            rows.push_back({{"m", m}, {"n", n}, {"exact", to_json(v)}, {"text", render(v)},
                            {"decimal", decimal_string(v)}});
        }
        out << nlohmann::json{{"max_sum", max_sum}, {"rows", std::move(rows)}}.dump(2) << "\n";
        break;
    }
    }
    return kExitOk;
}

int cmd_verify(unsigned max_sum, double rel_tol, ReportFormat format, std::ostream& out)
{
    const auto report = build_report(max_sum, rel_tol);
    out << render_report(report, format);
    return report.exit_code();
}

int cmd_deriv(unsigned n, RenderFormat format, std::ostream& out)
{
    const DerivRep& rep = derivative_rep(n);
    if (format == RenderFormat::json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : rep.numerator.coefficients())
            coeffs.push_back(c.get_str());
        out << nlohmann::json{{"order", rep.order},
                              {"coefficients", std::move(coeffs)},
                              {"denominator_exponent", rep.denominator_exponent()}}
                   .dump()
            << "\n";
    } else {
        out << "P_" << n << " = " << rep.numerator.to_string() << ", denominator (1+x^2)^"
            << rep.denominator_exponent() << "\n";
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact evaluation and verification of int_0^inf f_m(x) f_n(x) dx, f = 1/(1+x^2)",
                 "lorentzint"};
    app.require_subcommand(1);
    app.set_version_flag("--version", LORENTZINT_VERSION);

    const std::map<std::string, EvalMethod> methods{{"oracle", EvalMethod::oracle},
                                                    {"paper", EvalMethod::paper},
                                                    {"corrected", EvalMethod::corrected},
                                                    {"quadrature", EvalMethod::quadrature}};
    const std::map<std::string, RenderFormat> render_formats{{"text", RenderFormat::text},
                                                             {"json", RenderFormat::json}};
    const std::map<std::string, TableFormat> table_formats{
        {"csv", TableFormat::csv}, {"json", TableFormat::json}, {"markdown", TableFormat::markdown}};
    const std::map<std::string, ReportFormat> report_formats{{"json", ReportFormat::json},
                                                             {"markdown", ReportFormat::markdown}};

    unsigned m = 0, n = 0, max_sum = 0;
    double tol = 1e-10;
    EvalMethod method = EvalMethod::oracle;
    RenderFormat render_format = RenderFormat::text;
    TableFormat table_format = TableFormat::csv;
    ReportFormat report_format = ReportFormat::json;

    auto* eval = app.add_subcommand("eval", "Evaluate I(M,N)");
    eval->add_option("M", m, "first derivative order")->required();
    eval->add_option("N", n, "second derivative order")->required();
    eval->add_option("--method", method, "oracle|paper|corrected|quadrature")
        ->transform(CLI::CheckedTransformer(methods));
    eval->add_option("--format", render_format, "text|json")->transform(CLI::CheckedTransformer(render_formats));

    auto* table = app.add_subcommand("table", "Tabulate I(m,n) for m >= n, m+n <= S");
    table->add_option("--max", max_sum, "largest m+n")->required();
    table->add_option("--format", table_format, "csv|json|markdown")
        ->transform(CLI::CheckedTransformer(table_formats));

    auto* verify = app.add_subcommand("verify", "Compare closed forms against the exact oracle");
    verify->add_option("--max", max_sum, "largest m+n")->required();
    verify->add_option("--tol", tol, "quadrature relative tolerance (>= 1e-12)")
        ->check(CLI::Range(1e-12, 1.0));
    verify->add_option("--format", report_format, "json|markdown")
        ->transform(CLI::CheckedTransformer(report_formats));

    auto* deriv = app.add_subcommand("deriv", "Print the numerator polynomial of f_N");
    deriv->add_option("N", n, "derivative order")->required();
    deriv->add_option("--format", render_format, "text|json")
        ->transform(CLI::CheckedTransformer(render_formats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        out << LORENTZINT_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::Success&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    if (eval->parsed())
        return cmd_eval(m, n, method, render_format, out, err);
    if (table->parsed())
        return cmd_table(max_sum, table_format, out);
    if (verify->parsed())
        return cmd_verify(max_sum, tol, report_format, out);
    return cmd_deriv(n, render_format, out);
}

}  // namespace lorentzint

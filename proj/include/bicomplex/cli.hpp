#pragma once

// Command dispatch for the bicx tool. Each command builds one JSON document;
// the text output is a rendering of that same document, so both carry the
// same numbers (text rounds to 6 significant digits).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "bicomplex/core.hpp"
#include "bicomplex/format.hpp"
#include "bicomplex/products.hpp"
#include "bicomplex/seqspec.hpp"
#include "bicomplex/series.hpp"
#include "bicomplex/transcendental.hpp"

namespace bicomplex::cli {

using json = nlohmann::ordered_json;

enum class Command { eval, series, product, check_bounds };
enum class Output { text, json };

enum ExitCode : int { exit_ok = 0, exit_not_converged = 1, exit_parse_error = 2, exit_term_error = 3 };

struct RunConfig {
    Command command = Command::eval;
    std::string expr;
    double tol = 1e-10;
    std::size_t window = 8;
    std::uint64_t max_terms = 1'000'000;
    Output output = Output::text;
    std::optional<BranchIndex> branch;
    /// Index for eval and check-bounds.
    std::uint64_t at = 1;
    bool strict = false;

    void validate() const {
        if (!(tol > 0)) throw precondition_error("--tol must be positive");
        if (window < 2) throw precondition_error("--window must be at least 2");
        if (max_terms < window) throw precondition_error("--max-terms must be at least --window");
        if (at < 1) throw precondition_error("--at must be at least 1");
    }

    ConvergenceOptions convergence() const { return {tol, window, max_terms}; }
};

constexpr std::string_view to_string(Command c) {
    switch (c) {
    case Command::eval: return "eval";
    case Command::series: return "series";
    case Command::product: return "product";
    case Command::check_bounds: return "check-bounds";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// JSON encoding

inline json to_json(const Bicomplex& w) {
    const auto x = w.four_reals();
    const auto p = to_idempotent(w);
    return json{{"four_real", {x[0], x[1], x[2], x[3]}},
                {"idempotent", {{p.p1.real(), p.p1.imag()}, {p.p2.real(), p.p2.imag()}}}};
}

inline json optional_index(const std::optional<std::uint64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

inline json to_json(const SeriesReport& r) {
    return json{{"verdict", to_string(r.verdict)},
                {"limit_estimate", to_json(r.limit_estimate)},
                {"terms_used", r.terms_used},
                {"tail_delta", r.tail_delta},
                {"absolute", r.absolute},
                {"absolute_verdict", to_string(r.absolute_verdict)},
                {"component_verdicts", {to_string(r.component1), to_string(r.component2)}}};
}

inline json to_json(const ProductReport& r) {
    return json{{"verdict", to_string(r.verdict)},
                {"limit_estimate", to_json(r.limit_estimate)},
                {"terms_used", r.terms_used},
                {"necessary_condition_ok", r.necessary_condition_ok},
                {"absolute", r.absolute},
                {"log_sum", to_json(r.log_sum)},
                {"log_sum_verdict", to_string(r.log_sum_verdict)},
                {"criteria_agreement", r.criteria_agreement},
                {"singular_index", optional_index(r.singular_index)},
                {"log_norm", r.log_norm},
                {"tail_delta", r.tail_delta}};
}

inline json to_json(const AbsoluteConvergenceCheck& a) {
    return json{{"via_log_norms", to_string(a.via_log_norms)},
                {"via_deviation_norms", to_string(a.via_deviation_norms)},
                {"agree", a.agree},
                {"hypothesis_ok", a.hypothesis_ok},
                {"first_violation", optional_index(a.first_violation)},
                {"terms_used", a.terms_used}};
}

inline json to_json(const LogSumEquivalence& e) {
    return json{{"product_limit", to_json(e.product_limit)},
                {"exp_of_log_sum", to_json(e.exp_of_log_sum)},
                {"log_sum", to_json(e.log_sum)},
                {"max_discrepancy", e.max_discrepancy},
                {"terms_used", e.terms_used},
                {"branch_offset", {e.branch_offset.a, e.branch_offset.b}},
                {"branch_offset_changes", e.branch_offset_changes}};
}

inline json config_json(const RunConfig& c) {
    json j{{"tol", c.tol}, {"window", c.window}, {"max_terms", c.max_terms}};
    if (c.branch) j["branch"] = {c.branch->m, c.branch->n};
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering of a report document

namespace detail {

inline constexpr int text_digits = 6;
inline constexpr double text_noise_floor = 1e-14;

inline bool is_bicomplex(const json& j) {
    return j.is_object() && j.size() == 2 && j.contains("four_real") && j.contains("idempotent");
}

inline Bicomplex from_json(const json& j) {
    const auto& x = j.at("four_real");
    return Bicomplex::from_four_reals(x[0].get<double>(), x[1].get<double>(), x[2].get<double>(),
                                      x[3].get<double>());
}

inline std::string scalar_text(const json& j) {
    if (j.is_null()) return "-";
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_float()) return format_number(j.get<double>(), text_digits);
    if (j.is_number()) return j.dump();
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : " ") + scalar_text(e);
    return s;
}

inline void render_text(std::ostream& out, const json& doc, const std::string& prefix) {
    const RenderOptions ro{text_digits, text_noise_floor};
    for (const auto& [key, value] : doc.items()) {
        const std::string name = prefix + key;
        if (is_bicomplex(value)) {
            const Bicomplex w = from_json(value);
            out << name << ": " << render_four_real(w, ro) << "\n";
            out << name << " (idempotent): " << render_idempotent(w, ro) << "\n";
        } else if (value.is_object()) {
            render_text(out, value, name + ".");
        } else {
            out << name << ": " << scalar_text(value) << "\n";
        }
    }
}

} // namespace detail

inline void write(std::ostream& out, const json& doc, Output format) {
    if (format == Output::json)
        out << doc.dump(2) << "\n";
    else
        detail::render_text(out, doc, "");
}

// ---------------------------------------------------------------------------
// Commands

struct Outcome {
    json document;
    int exit_code = exit_ok;
};

inline Outcome run_eval(const RunConfig& c, const seqspec::Expr& e) {
    const Bicomplex w = seqspec::eval_term(e, c.at);
    json doc{{"command", "eval"}, {"expr", c.expr}, {"n", c.at}, {"value", to_json(w)}};
    const auto sv = is_singular(w);
    doc["singular"] = sv.is_singular;
    doc["cn"] = {cn(w).real(), cn(w).imag()};
    doc["norm"] = norm(w);
    if (c.branch) {
        if (sv.is_singular) throw singular_operand("logarithm of a null-cone element", c.at);
        doc["log_branch"] = to_json(log_branch(w, *c.branch));
    }
    return {doc, exit_ok};
}

inline Outcome run_series(const RunConfig& c, const seqspec::ExprPtr& e) {
    const SeriesReport r = analyze_series(seqspec::term_generator(e), c.convergence());
    json doc{{"command", "series"}, {"expr", c.expr}, {"config", config_json(c)}, {"report", to_json(r)}};
    const bool bad = c.strict && r.verdict != Verdict::converged;
    return {doc, bad ? exit_not_converged : exit_ok};
}

inline Outcome run_product(const RunConfig& c, const seqspec::ExprPtr& e) {
    const auto opt = c.convergence();
    const ProductReport r = evaluate_product(seqspec::term_generator(e), opt);
    json doc{{"command", "product"}, {"expr", c.expr}, {"config", config_json(c)}, {"report", to_json(r)}};
    if (r.verdict == ProductVerdict::singular_term) {
        doc["absolute_check"] = nullptr;
        doc["log_sum_equivalence"] = nullptr;
        return {doc, exit_term_error};
    }
    // The follow-up analyses stop where the main evaluation stopped.
    ConvergenceOptions sub = opt;
    sub.n_max = std::max<std::uint64_t>(r.terms_used, opt.window);
    doc["absolute_check"] = to_json(absolute_convergence_check(seqspec::term_generator(e), sub));
    doc["log_sum_equivalence"] = to_json(log_sum_equivalence(seqspec::term_generator(e), sub));
    const bool bad = c.strict && r.verdict != ProductVerdict::converged_nonsingular;
    return {doc, bad ? exit_not_converged : exit_ok};
}

inline Outcome run_check_bounds(const RunConfig& c, const seqspec::Expr& e) {
    const Bicomplex v = seqspec::eval_term(e, c.at);
    const Bicomplex w = v - Bicomplex{1.0};
    json doc{{"command", "check-bounds"}, {"expr", c.expr}, {"n", c.at}, {"w", to_json(w)}, {"norm_w", norm(w)}};
    const bool pre = norm(w) < 0.5;
    doc["precondition_ok"] = pre;
    bool ok = pre;
    if (pre) {
        const LogBoundCheck b = log_bound_check(w);
        doc["lower_ok"] = b.lower_ok;
        doc["upper_ok"] = b.upper_ok;
        doc["ratio"] = b.ratio;
        ok = b.lower_ok && b.upper_ok;
    } else {
        doc["lower_ok"] = nullptr;
        doc["upper_ok"] = nullptr;
        doc["ratio"] = nullptr;
    }
    return {doc, c.strict && !ok ? exit_not_converged : exit_ok};
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    seqspec::ExprPtr e;
    try {
        c.validate();
        e = seqspec::parse(c.expr);
    } catch (const seqspec::parse_error& ex) {
        err << "bicx: " << ex.what() << "\n";
        return exit_parse_error;
    } catch (const precondition_error& ex) {
        err << "bicx: " << ex.what() << "\n";
        return exit_parse_error;
    }

    try {
        Outcome o;
        switch (c.command) {
        case Command::eval: o = run_eval(c, *e); break;
        case Command::series: o = run_series(c, e); break;
        case Command::product: o = run_product(c, e); break;
        case Command::check_bounds: o = run_check_bounds(c, *e); break;
        }
        write(out, o.document, c.output);
        if (o.exit_code == exit_term_error) err << "bicx: singular term, evaluation aborted\n";
        return o.exit_code;
    } catch (const singular_operand& ex) {
        err << "bicx: " << ex.what() << "\n";
        return exit_term_error;
    } catch (const non_finite& ex) {
        err << "bicx: " << ex.what() << "\n";
        return exit_term_error;
    }
}

} // namespace bicomplex::cli

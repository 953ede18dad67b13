#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "hodge/birational.hpp"
#include "hodge/blowup.hpp"
#include "hodge/manifest.hpp"
#include "hodge/render.hpp"
#include "hodge/spectral.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hodge;

constexpr int kExitValidation = 2;
constexpr int kExitLookup = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitAudit = 5;

struct Options {
    std::vector<std::string> manifests;
    bool lenient = false;
    bool json = false;
    std::string color = "never";

    bool colorize() const {
        if (color == "always") return true;
        if (color == "auto") return isatty(fileno(stdout)) != 0;
        return false;
    }
};

std::string paint(const Options& opts, const char* code, const std::string& text) {
    if (!opts.colorize()) return text;
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string ok_word(const Options& opts, bool good, const std::string& yes, const std::string& no) {
    return good ? paint(opts, "32", yes) : paint(opts, "31", no);
}

std::vector<std::string> search_directories() {
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("HODGE_MANIFEST_PATH")) {
        std::string raw(env);
        std::size_t start = 0;
        while (start <= raw.size()) {
            const std::size_t colon = raw.find(':', start);
            const std::string piece = raw.substr(start, colon == std::string::npos ? colon : colon - start);
            if (!piece.empty()) dirs.push_back(piece);
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
    }
    return dirs;
}

fs::path resolve_manifest_path(const std::string& given) {
    if (fs::exists(given)) return given;
    if (!fs::path(given).is_absolute()) {
        for (const auto& dir : search_directories()) {
            const fs::path candidate = fs::path(dir) / given;
            if (fs::exists(candidate)) return candidate;
        }
    }
    throw ValidationError("manifest not found: " + given +
                          " (searched the working directory and HODGE_MANIFEST_PATH)");
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open manifest: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<ManifestDocument> load_documents(const Options& opts, bool validate_models) {
    if (opts.manifests.empty())
        throw ValidationError("no manifest given: pass --manifest PATH (HODGE_MANIFEST_PATH supplies search directories)");
    ParseOptions parse_opts;
    parse_opts.lenient = opts.lenient;
    parse_opts.validate_models = validate_models;
    std::vector<ManifestDocument> docs;
    for (const auto& given : opts.manifests) {
        const fs::path path = resolve_manifest_path(given);
        try {
            docs.push_back(parse_manifest(read_file(path), parse_opts));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
        } catch (const ValidationError& e) {
            throw ValidationError(path.string() + ": " + e.what());
        }
    }
    return docs;
}

Catalog load_catalog(const Options& opts) {
    Catalog catalog;
    for (const auto& doc : load_documents(opts, /*validate_models=*/true)) catalog.add(doc);
    return catalog;
}

std::string int_row(const std::vector<int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    return os.str();
}

std::string flag_text(const std::optional<bool>& flag) {
    if (!flag) return "unknown";
    return *flag ? "true" : "false";
}

void print_model(const ManifoldModel& m) {
    std::cout << "name: " << m.name << "\n";
    std::cout << "dim: " << m.dim << "\n";
    std::cout << "connected: " << (m.connected ? "true" : "false") << "\n";
    std::cout << "hodge:\n";
    for (const auto& line : render_diamond_lines(m.diamond)) std::cout << "  " << line << "\n";
    if (m.betti)
        std::cout << "betti: " << int_row(m.betti->values()) << (m.betti_derived ? " (derived from e1_degenerate)" : "")
                  << "\n";
    else
        std::cout << "betti: unknown\n";
    std::cout << "flags: ddbar=" << flag_text(m.flags.ddbar) << " e1_degenerate=" << flag_text(m.flags.e1_degenerate)
              << " fujiki=" << flag_text(m.flags.fujiki) << " kaehler=" << flag_text(m.flags.kaehler) << "\n";
    if (effective_betti(m))
        std::cout << "defect: " << int_row(frolicher_defect(m).values()) << "\n";
    else
        std::cout << "defect: unknown (Betti data required)\n";
    for (const auto& note : m.provenance) std::cout << "note: " << note << "\n";
}

int cmd_show(const Options& opts, const std::string& name) {
    const Catalog catalog = load_catalog(opts);
    const ManifoldModel& model = catalog.model(name);
    if (opts.json)
        std::cout << serialize(single_model_document(model));
    else
        print_model(model);
    return 0;
}

int cmd_blowup(const Options& opts, const std::string& ambient, const std::vector<std::string>& centers,
               const std::string& out_path) {
    const Catalog catalog = load_catalog(opts);
    std::vector<ManifoldModel> components;
    components.reserve(centers.size());
    for (const auto& center : centers) components.push_back(catalog.model(center));
    const BlowUpSpec spec(catalog.model(ambient), std::move(components));
    const ManifoldModel result = blow_up(spec);

    const std::string json_text = serialize(single_model_document(result));
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write: " + out_path);
        out << json_text;
        std::cerr << "wrote " << out_path << "\n";
    }
    if (opts.json)
        std::cout << json_text;
    else
        print_model(result);
    return 0;
}

std::string h11_b2_summary(const ManifoldModel& m) {
    std::ostringstream os;
    os << "h11=" << m.h(1, 1) << " b2=";
    if (auto b = effective_betti(m))
        os << b->at(2);
    else
        os << "?";
    return os.str();
}

int cmd_factor(const Options& opts, const std::string& script_name, bool audit) {
    const Catalog catalog = load_catalog(opts);
    const FactorizationScript& script = catalog.script(script_name);
    const ScriptRun run = run_script(script);
    const int delta = count_delta(script);

    if (opts.json) {
        ManifestDocument doc;
        for (std::size_t i = 0; i < run.trace.size(); ++i) {
            ManifoldModel step = run.trace[i];
            step.name = "X" + std::to_string(i);
            step.provenance.clear();
            doc.manifolds.push_back(std::move(step));
        }
        std::cout << serialize(doc);
    } else {
        std::cout << "script: " << script.name << "\n";
        std::cout << "start: " << script.start.name << "  " << h11_b2_summary(run.trace.front()) << "\n";
        for (std::size_t i = 0; i < script.steps.size(); ++i) {
            const auto& step = script.steps[i];
            std::cout << "step " << i << ": "
                      << (step.direction == StepDirection::BlowUp ? "blowup" : "blowdown") << " along "
                      << step.center.name << " -> " << h11_b2_summary(run.trace[i + 1]) << "\n";
        }
        std::cout << "count_delta: " << delta << "\n";
    }

    bool contracts_ok = true;
    const int h11_delta = run.final.h(1, 1) - run.trace.front().h(1, 1);
    if (h11_delta != delta) contracts_ok = false;
    const auto b_start = effective_betti(run.trace.front());
    const auto b_final = effective_betti(run.final);
    std::optional<int> b2_delta;
    if (b_start && b_final) {
        b2_delta = b_final->at(2) - b_start->at(2);
        if (*b2_delta != delta) contracts_ok = false;
    }
    if (!opts.json) {
        std::cout << "h11 delta: " << h11_delta << "\n";
        if (b2_delta) std::cout << "b2 delta: " << *b2_delta << "\n";
    }

    bool audit_ok = true;
    if (audit) {
        const InvariantAuditReport report = invariant_audit(run.trace.front(), run.final);
        audit_ok = report.all_equal();
        std::ostream& os = opts.json ? std::cerr : std::cout;
        os << "audit (start vs final):\n";
        for (const auto& entry : report.entries) {
            os << "  " << entry.invariant << ": ";
            if (entry.left)
                os << *entry.left;
            else
                os << "?";
            os << " vs ";
            if (entry.right)
                os << *entry.right;
            else
                os << "?";
            switch (entry.status) {
                case InvariantAuditReport::Status::Equal: os << "  " << ok_word(opts, true, "equal", "-"); break;
                case InvariantAuditReport::Status::Different: os << "  " << ok_word(opts, false, "-", "DIFFER"); break;
                case InvariantAuditReport::Status::Unknown: os << "  unknown"; break;
            }
            os << "\n";
        }
    }

    if (!contracts_ok) {
        std::cerr << "contract violation: count_delta does not match the h11/b2 difference\n";
        return kExitAudit;
    }
    if (!audit_ok) {
        std::cerr << "audit failed: a bimeromorphic invariant differs between the endpoints\n";
        return kExitAudit;
    }
    return 0;
}

int cmd_check(const Options& opts, const std::string& name) {
    const auto docs = load_documents(opts, /*validate_models=*/false);

    std::vector<ManifoldModel> models;
    for (const auto& doc : docs)
        for (const auto& model : doc.manifolds) models.push_back(model);
    std::sort(models.begin(), models.end(),
              [](const ManifoldModel& a, const ManifoldModel& b) { return a.name < b.name; });
    for (std::size_t i = 0; i + 1 < models.size(); ++i)
        if (models[i].name == models[i + 1].name)
            throw ValidationError("catalog: duplicate model name '" + models[i].name + "'");

    if (!name.empty()) {
        bool found = false;
        for (const auto& model : models) found = found || model.name == name;
        if (!found) throw LookupError("unknown model '" + name + "'");
    }

    ManifestDocument valid_doc;
    bool all_valid = true;
    std::ostream& os = opts.json ? std::cerr : std::cout;
    for (const auto& raw : models) {
        if (!name.empty() && raw.name != name) continue;
        const auto issues = validation_issues(raw);
        os << "model: " << raw.name << "\n";
        os << "  valid: " << ok_word(opts, issues.empty(), "yes", "no") << "\n";
        for (const auto& issue : issues) os << "    - " << issue << "\n";
        if (!issues.empty()) {
            all_valid = false;
            continue;
        }
        const ManifoldModel model = normalized(raw);
        valid_doc.manifolds.push_back(model);
        os << "  serre_symmetric: " << (serre_symmetric(model.diamond) ? "yes" : "no") << "\n";
        os << "  hodge_symmetric: " << (hodge_symmetric(model.diamond) ? "yes" : "no") << "\n";
        if (effective_betti(model)) {
            const DegeneracyReport report = degenerates_at_E1(model);
            os << "  defect: " << int_row(report.defect.values()) << "\n";
            os << "  e1_degenerate: " << (report.degenerate ? "yes" : "no");
            if (report.first_failing_k) os << " (first failing k = " << *report.first_failing_k << ")";
            os << "\n";
            os << "  ddbar_necessary: " << (ddbar_necessary(model) ? "yes" : "no") << "\n";
        } else {
            os << "  defect: unknown (Betti data required)\n";
            os << "  e1_degenerate: unknown\n";
            os << "  ddbar_necessary: unknown (Betti data required)\n";
        }
    }
    if (opts.json) std::cout << serialize(valid_doc);
    return all_valid ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"hodge -- exact calculus of Hodge diamonds under blow-ups and blow-downs"};
    app.footer("Exit codes: 0 success, 2 parse/validation error, 3 unknown name, 4 violated precondition, "
               "5 contract-audit failure.");
    app.require_subcommand(1);
    app.add_option("--manifest", opts.manifests,
                   "Manifest file(s), repeatable; later files may reference earlier names. Relative paths are "
                   "searched in the directories of HODGE_MANIFEST_PATH (colon-separated).")
        ->type_name("PATH");
    app.add_flag("--lenient", opts.lenient, "Ignore unknown manifest keys");
    app.add_flag("--json", opts.json, "Emit canonical manifest JSON instead of text");
    app.add_option("--color", opts.color, "Color output: auto, always or never (default)")
        ->check(CLI::IsMember({"auto", "always", "never"}));

    std::string show_name;
    auto* show = app.add_subcommand(
        "show", "Print one model: diamond rows run k = 0..2n top to bottom, p decreasing left to right");
    show->add_option("name", show_name, "Model name")->required();

    std::string ambient;
    std::vector<std::string> centers;
    std::string out_path;
    auto* blowup_cmd = app.add_subcommand("blowup", "Blow up an ambient model along one or more centers");
    blowup_cmd->add_option("--ambient", ambient, "Ambient model name")->required();
    blowup_cmd->add_option("--center", centers, "Center model name (repeat for a disconnected center)")->required();
    blowup_cmd->add_option("--out", out_path, "Also write the result as a manifest file")->type_name("PATH");

    std::string script_name;
    bool audit = false;
    auto* factor = app.add_subcommand("factor", "Run a factorization script and check its contracts");
    factor->add_option("--script", script_name, "Script name")->required();
    factor->add_flag("--audit", audit, "Compare bimeromorphic invariants of the endpoints");

    std::string check_name;
    auto* check = app.add_subcommand("check", "Validate models and report symmetry/degeneracy verdicts");
    check->add_option("name", check_name, "Restrict to one model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (show->parsed()) return cmd_show(opts, show_name);
        if (blowup_cmd->parsed()) return cmd_blowup(opts, ambient, centers, out_path);
        if (factor->parsed()) return cmd_factor(opts, script_name, audit);
        if (check->parsed()) return cmd_check(opts, check_name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLookup;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}

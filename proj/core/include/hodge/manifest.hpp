#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hodge/birational.hpp"
#include "hodge/model.hpp"

namespace hodge {

/// A factorization script as written in a manifest: model references by name,
/// resolved against a Catalog once every manifest is loaded.
struct ScriptSpec {
    struct Step {
        std::string op;  // "blowup" | "blowdown"
        std::string center;
    };
    std::string name;
    std::string start;
    std::vector<Step> steps;
};

struct ManifestDocument {
    std::string format_version = "1";
    std::vector<ManifoldModel> manifolds;
    std::vector<ScriptSpec> scripts;
};

struct ParseOptions {
    bool lenient = false;          // ignore unknown keys instead of rejecting them
    bool validate_models = true;   // run normalization; off for diagnostic passes
};

// Parses and (by default) validates a manifest. Syntax errors raise
// ParseError with line/column; semantic errors raise ValidationError naming
// the violated invariant and the offending model.
ManifestDocument parse_manifest(std::string_view text, const ParseOptions& options = {});

// Canonical form: sorted keys, two-space indentation at the document level,
// one line per manifold/script, numeric arrays inline, LF line endings.
// Byte-stable: equal documents serialize to equal bytes.
std::string serialize(const ManifestDocument& doc);

ManifestDocument single_model_document(const ManifoldModel& model);

/// Name-resolution table over one or more loaded manifests. Later documents
/// may reference names from earlier ones; duplicates are rejected.
class Catalog {
public:
    void add(const ManifestDocument& doc);

    bool has_model(const std::string& name) const;
    const ManifoldModel& model(const std::string& name) const;  // LookupError

    bool has_script(const std::string& name) const;
    const FactorizationScript& script(const std::string& name) const;  // LookupError

    std::vector<std::string> model_names() const;  // sorted
    std::vector<std::string> script_names() const;

private:
    std::map<std::string, ManifoldModel> models_;
    std::map<std::string, FactorizationScript> scripts_;
};

}  // namespace hodge

#include "hodge/manifest.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hodge {

namespace {

using nlohmann::json;

constexpr int kMaxDim = 32;

[[noreturn]] void parse_error_at(std::string_view text, std::size_t byte, const std::string& message) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream os;
    os << "manifest syntax error at line " << line << ", column " << column << ": " << message;
    throw ParseError(os.str(), line, column);
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where, const ParseOptions& options) {
    if (options.lenient) return;
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known)
            throw ValidationError(where + ": unknown key \"" + item.key() + "\" (re-run with --lenient to ignore)");
    }
}

int require_int(const json& value, const std::string& where) {
    if (!value.is_number_integer())
        throw ValidationError(where + ": expected an integer, got " + std::string(value.type_name()));
    return value.get<int>();
}

std::string require_string(const json& value, const std::string& where) {
    if (!value.is_string())
        throw ValidationError(where + ": expected a string, got " + std::string(value.type_name()));
    return value.get<std::string>();
}

bool require_bool(const json& value, const std::string& where) {
    if (!value.is_boolean())
        throw ValidationError(where + ": expected a boolean, got " + std::string(value.type_name()));
    return value.get<bool>();
}

ManifoldModel model_from_json(const json& node, std::size_t index, const ParseOptions& options) {
    const std::string where = "manifolds[" + std::to_string(index) + "]";
    if (!node.is_object()) throw ValidationError(where + ": expected an object");
    reject_unknown_keys(node, {"name", "dim", "connected", "hodge", "betti", "flags"}, where, options);

    ManifoldModel m;
    if (!node.contains("name")) throw ValidationError(where + ": missing \"name\"");
    m.name = require_string(node.at("name"), where + ".name");
    if (m.name.empty()) throw ValidationError(where + ": \"name\" must be non-empty");
    const std::string who = "model '" + m.name + "'";

    if (!node.contains("dim")) throw ValidationError(who + ": missing \"dim\"");
    m.dim = require_int(node.at("dim"), who + ".dim");
    if (m.dim < 0) throw ValidationError(who + ": dim must be >= 0");
    if (m.dim > kMaxDim) throw ValidationError(who + ": dim must be <= " + std::to_string(kMaxDim));

    m.connected = node.contains("connected") ? require_bool(node.at("connected"), who + ".connected") : true;

    if (!node.contains("hodge")) throw ValidationError(who + ": missing \"hodge\"");
    const json& hodge_node = node.at("hodge");
    if (!hodge_node.is_array()) throw ValidationError(who + ".hodge: expected an array of rows (row index p)");
    std::vector<std::vector<int>> rows;
    for (std::size_t p = 0; p < hodge_node.size(); ++p) {
        const json& row = hodge_node[p];
        if (!row.is_array()) throw ValidationError(who + ".hodge[" + std::to_string(p) + "]: expected an array");
        std::vector<int> cells;
        for (std::size_t q = 0; q < row.size(); ++q)
            cells.push_back(require_int(row[q], who + ".hodge[" + std::to_string(p) + "][" + std::to_string(q) + "]"));
        rows.push_back(std::move(cells));
    }
    try {
        m.diamond = HodgeDiamond(m.dim, std::move(rows));
    } catch (const ValidationError& e) {
        throw ValidationError(who + ": " + e.what());
    }

    if (node.contains("betti")) {
        const json& betti_node = node.at("betti");
        if (!betti_node.is_array()) throw ValidationError(who + ".betti: expected an array");
        std::vector<int> betti;
        for (std::size_t k = 0; k < betti_node.size(); ++k)
            betti.push_back(require_int(betti_node[k], who + ".betti[" + std::to_string(k) + "]"));
        try {
            m.betti = BettiVector(m.dim, std::move(betti));
        } catch (const ValidationError& e) {
            throw ValidationError(who + ": " + e.what());
        }
    }

    if (node.contains("flags")) {
        const json& flags = node.at("flags");
        if (!flags.is_object()) throw ValidationError(who + ".flags: expected an object");
        reject_unknown_keys(flags, {"kaehler", "fujiki", "ddbar", "e1_degenerate"}, who + ".flags", options);
        if (flags.contains("kaehler")) m.flags.kaehler = require_bool(flags.at("kaehler"), who + ".flags.kaehler");
        if (flags.contains("fujiki")) m.flags.fujiki = require_bool(flags.at("fujiki"), who + ".flags.fujiki");
        if (flags.contains("ddbar")) m.flags.ddbar = require_bool(flags.at("ddbar"), who + ".flags.ddbar");
        if (flags.contains("e1_degenerate"))
            m.flags.e1_degenerate = require_bool(flags.at("e1_degenerate"), who + ".flags.e1_degenerate");
    }
    return m;
}

ScriptSpec script_from_json(const json& node, std::size_t index, const ParseOptions& options) {
    const std::string where = "scripts[" + std::to_string(index) + "]";
    if (!node.is_object()) throw ValidationError(where + ": expected an object");
    reject_unknown_keys(node, {"name", "start", "steps"}, where, options);

    ScriptSpec s;
    if (!node.contains("name")) throw ValidationError(where + ": missing \"name\"");
    s.name = require_string(node.at("name"), where + ".name");
    if (s.name.empty()) throw ValidationError(where + ": \"name\" must be non-empty");
    const std::string who = "script '" + s.name + "'";

    if (!node.contains("start")) throw ValidationError(who + ": missing \"start\"");
    s.start = require_string(node.at("start"), who + ".start");

    if (!node.contains("steps")) throw ValidationError(who + ": missing \"steps\"");
    const json& steps = node.at("steps");
    if (!steps.is_array()) throw ValidationError(who + ".steps: expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const json& step = steps[i];
        const std::string step_where = who + ".steps[" + std::to_string(i) + "]";
        if (!step.is_object()) throw ValidationError(step_where + ": expected an object");
        reject_unknown_keys(step, {"op", "center"}, step_where, options);
        if (!step.contains("op") || !step.contains("center"))
            throw ValidationError(step_where + ": needs \"op\" and \"center\"");
        ScriptSpec::Step out;
        out.op = require_string(step.at("op"), step_where + ".op");
        if (out.op != "blowup" && out.op != "blowdown")
            throw ValidationError(step_where + ".op: expected \"blowup\" or \"blowdown\", got \"" + out.op + "\"");
        out.center = require_string(step.at("center"), step_where + ".center");
        s.steps.push_back(std::move(out));
    }
    return s;
}

// ---- canonical writer ----

void write_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\b': os << "\\b"; break;
            case '\f': os << "\\f"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void write_int_array(std::ostream& os, const std::vector<int>& values) {
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << ']';
}

void write_model(std::ostream& os, const ManifoldModel& m) {
    os << '{';
    if (m.betti && !m.betti_derived) {
        os << "\"betti\": ";
        write_int_array(os, m.betti->values());
        os << ", ";
    }
    os << "\"connected\": " << (m.connected ? "true" : "false");
    os << ", \"dim\": " << m.dim;
    const StructureFlags& f = m.flags;
    if (f.kaehler || f.fujiki || f.ddbar || f.e1_degenerate) {
        os << ", \"flags\": {";
        bool first = true;
        auto field = [&](const char* key, const std::optional<bool>& value) {
            if (!value) return;
            if (!first) os << ", ";
            first = false;
            os << '"' << key << "\": " << (*value ? "true" : "false");
        };
        field("ddbar", f.ddbar);
        field("e1_degenerate", f.e1_degenerate);
        field("fujiki", f.fujiki);
        field("kaehler", f.kaehler);
        os << '}';
    }
    os << ", \"hodge\": [";
    for (std::size_t p = 0; p < m.diamond.entries().size(); ++p) {
        if (p) os << ", ";
        write_int_array(os, m.diamond.entries()[p]);
    }
    os << ']';
    os << ", \"name\": ";
    write_string(os, m.name);
    os << '}';
}

void write_script(std::ostream& os, const ScriptSpec& s) {
    os << "{\"name\": ";
    write_string(os, s.name);
    os << ", \"start\": ";
    write_string(os, s.start);
    os << ", \"steps\": [";
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        if (i) os << ", ";
        os << "{\"center\": ";
        write_string(os, s.steps[i].center);
        os << ", \"op\": ";
        write_string(os, s.steps[i].op);
        os << '}';
    }
    os << "]}";
}

}  // namespace

ManifestDocument parse_manifest(std::string_view text, const ParseOptions& options) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error_at(text, e.byte, e.what());
    }
    if (!root.is_object()) throw ValidationError("manifest: top level must be an object");
    reject_unknown_keys(root, {"format_version", "manifolds", "scripts"}, "manifest", options);

    ManifestDocument doc;
    if (!root.contains("format_version")) throw ValidationError("manifest: missing \"format_version\"");
    doc.format_version = require_string(root.at("format_version"), "manifest.format_version");
    if (doc.format_version != "1")
        throw ValidationError("manifest: unsupported format_version \"" + doc.format_version + "\" (expected \"1\")");

    if (!root.contains("manifolds")) throw ValidationError("manifest: missing \"manifolds\"");
    const json& manifolds = root.at("manifolds");
    if (!manifolds.is_array()) throw ValidationError("manifest.manifolds: expected an array");
    for (std::size_t i = 0; i < manifolds.size(); ++i)
        doc.manifolds.push_back(model_from_json(manifolds[i], i, options));

    for (std::size_t i = 0; i < doc.manifolds.size(); ++i)
        for (std::size_t j = i + 1; j < doc.manifolds.size(); ++j)
            if (doc.manifolds[i].name == doc.manifolds[j].name)
                throw ValidationError("manifest: duplicate model name '" + doc.manifolds[i].name + "'");

    if (root.contains("scripts")) {
        const json& scripts = root.at("scripts");
        if (!scripts.is_array()) throw ValidationError("manifest.scripts: expected an array");
        for (std::size_t i = 0; i < scripts.size(); ++i)
            doc.scripts.push_back(script_from_json(scripts[i], i, options));
        for (std::size_t i = 0; i < doc.scripts.size(); ++i)
            for (std::size_t j = i + 1; j < doc.scripts.size(); ++j)
                if (doc.scripts[i].name == doc.scripts[j].name)
                    throw ValidationError("manifest: duplicate script name '" + doc.scripts[i].name + "'");
    }

    if (options.validate_models) {
        std::vector<std::string> problems;
        for (auto& model : doc.manifolds) {
            try {
                model = normalized(std::move(model));
            } catch (const ValidationError& e) {
                problems.push_back(e.what());
            }
        }
        if (!problems.empty()) {
            std::string joined = "manifest validation failed:";
            for (const auto& p : problems) joined += "\n" + p;
            throw ValidationError(joined);
        }
    }
    return doc;
}

std::string serialize(const ManifestDocument& doc) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": ";
    write_string(os, doc.format_version);
    os << ",\n";
    os << "  \"manifolds\": [";
    if (doc.manifolds.empty()) {
        os << "]";
    } else {
        os << "\n";
        for (std::size_t i = 0; i < doc.manifolds.size(); ++i) {
            os << "    ";
            write_model(os, doc.manifolds[i]);
            os << (i + 1 < doc.manifolds.size() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    if (!doc.scripts.empty()) {
        os << ",\n  \"scripts\": [\n";
        for (std::size_t i = 0; i < doc.scripts.size(); ++i) {
            os << "    ";
            write_script(os, doc.scripts[i]);
            os << (i + 1 < doc.scripts.size() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    os << "\n}\n";
    return os.str();
}

ManifestDocument single_model_document(const ManifoldModel& model) {
    ManifestDocument doc;
    doc.manifolds.push_back(model);
    return doc;
}

void Catalog::add(const ManifestDocument& doc) {
    for (const auto& model : doc.manifolds) {
        if (models_.count(model.name))
            throw ValidationError("catalog: duplicate model name '" + model.name + "'");
        models_.emplace(model.name, model);
    }
    for (const auto& spec : doc.scripts) {
        if (scripts_.count(spec.name)) throw ValidationError("catalog: duplicate script name '" + spec.name + "'");
        FactorizationScript script;
        script.name = spec.name;
        try {
            script.start = model(spec.start);
            for (const auto& step : spec.steps) {
                FactorizationStep out;
                out.direction = (step.op == "blowup") ? StepDirection::BlowUp : StepDirection::BlowDown;
                out.center = model(step.center);
                script.steps.push_back(std::move(out));
            }
        } catch (const LookupError& e) {
            throw ValidationError("script '" + spec.name + "': unresolved model reference (" + e.what() + ")");
        }
        scripts_.emplace(spec.name, std::move(script));
    }
}

bool Catalog::has_model(const std::string& name) const { return models_.count(name) != 0; }

const ManifoldModel& Catalog::model(const std::string& name) const {
    auto it = models_.find(name);
    if (it == models_.end()) throw LookupError("unknown model '" + name + "'");
    return it->second;
}

bool Catalog::has_script(const std::string& name) const { return scripts_.count(name) != 0; }

const FactorizationScript& Catalog::script(const std::string& name) const {
    auto it = scripts_.find(name);
    if (it == scripts_.end()) throw LookupError("unknown script '" + name + "'");
    return it->second;
}

std::vector<std::string> Catalog::model_names() const {
    std::vector<std::string> names;
    names.reserve(models_.size());
    for (const auto& [name, model] : models_) names.push_back(name);
    return names;
}

std::vector<std::string> Catalog::script_names() const {
    std::vector<std::string> names;
    names.reserve(scripts_.size());
    for (const auto& [name, script] : scripts_) names.push_back(name);
    return names;
}

}  // namespace hodge

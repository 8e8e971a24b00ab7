#include "ltd/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ltd/errors.hpp"
#include "ltd/version.hpp"

namespace ltd {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

char to_lower(char c) {
    return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lower(std::string s) {
    for (char& c : s) c = to_lower(c);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Try to read a date as one of: YYYY-M-D, M/D/YYYY (month first), D.M.YYYY
// (day first). Returns the zero-padded ISO-8601 form, or nothing.
std::optional<std::string> to_iso_date(const std::string& s) {
    char sep = 0;
    for (char c : s) {
        if (c == '-' || c == '/' || c == '.') {
            sep = c;
            break;
        }
    }
    if (sep == 0) return std::nullopt;
    std::vector<std::string_view> parts;
    std::string_view rest = s;
    while (!rest.empty()) {
        const std::size_t cut = rest.find(sep);
        parts.push_back(rest.substr(0, cut));
        if (cut == std::string_view::npos) break;
        rest = rest.substr(cut + 1);
    }
    if (parts.size() != 3) return std::nullopt;
    for (const std::string_view p : parts) {
        if (!all_digits(p) || p.size() > 4) return std::nullopt;
    }
    const auto value = [&](std::size_t i) {
        int v = 0;
        std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
        return v;
    };
    int year, month, day;
    if (sep == '-') {
        if (parts[0].size() != 4) return std::nullopt;
        year = value(0), month = value(1), day = value(2);
    } else if (sep == '/') {
        if (parts[2].size() != 4) return std::nullopt;
        month = value(0), day = value(1), year = value(2);
    } else {
        if (parts[2].size() != 4) return std::nullopt;
        day = value(0), month = value(1), year = value(2);
    }
    if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return std::string(buf);
}

} // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t line = 1;

    const auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    const auto end_row = [&] {
        end_field();
        const bool blank = row.size() == 1 && row[0].empty();
        if (!blank) rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field.empty() && !field_started) {
                    quoted = true;
                    field_started = true;
                } else {
                    field.push_back(c);
                }
                break;
            case ',': end_field(); break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                ++line;
                end_row();
                break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                field_started = true;
                field.push_back(c);
                break;
        }
    }
    if (quoted) {
        throw InputError("CSV line " + std::to_string(line) + ": unterminated quoted field");
    }
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string normalize_value(const std::string& value, const NormalizeOptions& opts) {
    if (!opts.enabled && !opts.dates) return value;
    // Trim and collapse internal whitespace runs to one space.
    std::string out;
    out.reserve(value.size());
    bool pending_space = false;
    for (char c : value) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(to_lower(c));
    }
    if (opts.dates) {
        if (auto iso = to_iso_date(out)) return *iso;
    }
    return out;
}

namespace {

struct ClaimsFile {
    bool categorical = true;
    std::vector<RawClaim> categorical_claims;
    std::vector<RawBinaryClaim> binary_claims;
};

ClaimsFile read_claims_csv(const std::filesystem::path& path, const NormalizeOptions& opts) {
    const auto rows = parse_csv(read_text_file(path));
    if (rows.empty()) throw InputError(path.string() + ": empty claims file");
    std::vector<std::string> header;
    header.reserve(rows[0].size());
    for (const std::string& h : rows[0]) header.push_back(lower(normalize_value(h, {true, false})));

    ClaimsFile out;
    if (header == std::vector<std::string>{"source", "attribute", "value"}) {
        out.categorical = true;
    } else if (header == std::vector<std::string>{"source", "fact", "polarity"}) {
        out.categorical = false;
    } else {
        throw InputError(path.string() +
                         ": line 1: expected header 'source,attribute,value' or "
                         "'source,fact,polarity'");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != 3) {
            throw InputError(path.string() + ": line " + std::to_string(i + 1) +
                             ": expected 3 fields, found " + std::to_string(row.size()));
        }
        if (out.categorical) {
            out.categorical_claims.push_back(
                RawClaim{row[0], row[1], normalize_value(row[2], opts)});
        } else {
            if (row[2] != "0" && row[2] != "1") {
                throw InputError(path.string() + ": line " + std::to_string(i + 1) +
                                 ": polarity must be 0 or 1, found '" + row[2] + "'");
            }
            out.binary_claims.push_back(RawBinaryClaim{row[0], row[1], row[2] == "1"});
        }
    }
    return out;
}

struct TruthFile {
    bool categorical = true;
    std::vector<std::pair<std::string, std::string>> attribute_truth;
    std::vector<std::pair<std::string, bool>> fact_truth;
};

TruthFile read_truth_csv(const std::filesystem::path& path, const NormalizeOptions& opts) {
    const auto rows = parse_csv(read_text_file(path));
    if (rows.empty()) throw InputError(path.string() + ": empty truth file");
    std::vector<std::string> header;
    for (const std::string& h : rows[0]) header.push_back(lower(normalize_value(h, {true, false})));

    TruthFile out;
    if (header == std::vector<std::string>{"attribute", "value"}) {
        out.categorical = true;
    } else if (header == std::vector<std::string>{"fact", "truth"}) {
        out.categorical = false;
    } else {
        throw InputError(path.string() +
                         ": line 1: expected header 'attribute,value' or 'fact,truth'");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != 2) {
            throw InputError(path.string() + ": line " + std::to_string(i + 1) +
                             ": expected 2 fields, found " + std::to_string(row.size()));
        }
        if (out.categorical) {
            out.attribute_truth.emplace_back(row[0], normalize_value(row[1], opts));
        } else {
            if (row[1] != "0" && row[1] != "1") {
                throw InputError(path.string() + ": line " + std::to_string(i + 1) +
                                 ": truth must be 0 or 1, found '" + row[1] + "'");
            }
            out.fact_truth.emplace_back(row[0], row[1] == "1");
        }
    }
    return out;
}

} // namespace

Dataset load_dataset(const std::filesystem::path& claims_path,
                     const std::optional<std::filesystem::path>& truth_path,
                     const NormalizeOptions& opts) {
    const ClaimsFile claims = read_claims_csv(claims_path, opts);
    if (!truth_path) {
        return claims.categorical ? Dataset::binarize(claims.categorical_claims)
                                  : Dataset::from_binary(claims.binary_claims);
    }
    const TruthFile truth = read_truth_csv(*truth_path, opts);
    if (truth.categorical != claims.categorical) {
        throw InputError("claims file and truth file use different layouts");
    }
    return claims.categorical
               ? Dataset::binarize(claims.categorical_claims, truth.attribute_truth)
               : Dataset::from_binary(claims.binary_claims, truth.fact_truth);
}

void write_claims_csv(const std::filesystem::path& path, const Dataset& d) {
    std::string out = "source,attribute,value\n";
    for (const RawClaim& c : d.categorical_claims()) {
        out += csv_escape(c.source) + "," + csv_escape(c.attribute) + "," + csv_escape(c.value) +
               "\n";
    }
    write_text_file(path, out);
}

void write_truth_csv(const std::filesystem::path& path, const Dataset& d) {
    std::string out = "attribute,value\n";
    for (AttributeId a = 0; a < d.attribute_count(); ++a) {
        const ValueId t = d.attribute_truth(a);
        if (t == kNoId) continue;
        out += csv_escape(d.attribute_names()[a]) + "," + csv_escape(d.value_names()[t]) + "\n";
    }
    write_text_file(path, out);
}

namespace {

Json parse_toml_subset(const std::string& text, const std::string& file) {
    Json out = Json::object();
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // Strip comments outside quotes, then surrounding whitespace.
        std::string line;
        bool in_string = false;
        for (char c : raw) {
            if (c == '"') in_string = !in_string;
            if (c == '#' && !in_string) break;
            line.push_back(c);
        }
        std::size_t b = 0, e = line.size();
        while (b < e && is_space(line[b])) ++b;
        while (e > b && is_space(line[e - 1])) --e;
        line = line.substr(b, e - b);
        if (line.empty()) continue;
        if (line.front() == '[') {
            throw ConfigError(file + ": line " + std::to_string(line_no) +
                              ": TOML tables are not supported; use flat keys");
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(file + ": line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = line.substr(0, eq);
        while (!key.empty() && is_space(key.back())) key.pop_back();
        std::string value = line.substr(eq + 1);
        std::size_t vb = 0;
        while (vb < value.size() && is_space(value[vb])) ++vb;
        value = value.substr(vb);
        if (key.empty() || value.empty()) {
            throw ConfigError(file + ": line " + std::to_string(line_no) + ": expected key = value");
        }
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') {
                throw ConfigError(file + ": line " + std::to_string(line_no) +
                                  ": unterminated string");
            }
            out[key] = value.substr(1, value.size() - 2);
        } else if (value == "true" || value == "false") {
            out[key] = value == "true";
        } else {
            try {
                if (value.find_first_of(".eE") != std::string::npos) {
                    out[key] = std::stod(value);
                } else {
                    out[key] = static_cast<std::int64_t>(std::stoll(value));
                }
            } catch (const std::exception&) {
                throw ConfigError(file + ": line " + std::to_string(line_no) +
                                  ": cannot parse value '" + value + "'");
            }
        }
    }
    return out;
}

} // namespace

Json read_config_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    if (lower(path.extension().string()) == ".toml") {
        return parse_toml_subset(text, path.string());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

namespace {

template <typename T>
void read_key(const Json& j, const char* key, T& target, std::vector<std::string>& unknown) {
    (void)unknown;
    const auto it = j.find(key);
    if (it == j.end()) return;
    try {
        target = it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

} // namespace

void apply_config(const Json& j, RunConfig& run, SynthConfig* synth) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    static const std::vector<std::string> run_keys = {
        "initial_tpr", "initial_fpr", "initial_prevalence",
        "learning_rate_base", "learning_rate_decay", "minibatch_size",
        "max_epochs", "convergence_tolerance", "max_iterations",
        "iteration_tolerance", "gibbs_tpr_strength", "gibbs_fpr_strength",
        "gibbs_prevalence_strength", "gibbs_iterations", "lambda_steps", "seed"};
    static const std::vector<std::string> synth_keys = {
        "n_sources", "n_attributes", "values_min", "values_max",
        "claim_frequency_mean", "claim_frequency_concentration",
        "accuracy_mean", "accuracy_concentration", "copy_probability"};

    for (const auto& [key, value] : j.items()) {
        (void)value;
        const bool is_run = std::find(run_keys.begin(), run_keys.end(), key) != run_keys.end();
        const bool is_synth =
            std::find(synth_keys.begin(), synth_keys.end(), key) != synth_keys.end();
        if (!is_run && !(is_synth && synth != nullptr)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    std::vector<std::string> unknown;
    read_key(j, "initial_tpr", run.initial_tpr, unknown);
    read_key(j, "initial_fpr", run.initial_fpr, unknown);
    read_key(j, "initial_prevalence", run.initial_prevalence, unknown);
    read_key(j, "learning_rate_base", run.learning_rate_base, unknown);
    read_key(j, "learning_rate_decay", run.learning_rate_decay, unknown);
    read_key(j, "minibatch_size", run.minibatch_size, unknown);
    read_key(j, "max_epochs", run.max_epochs, unknown);
    read_key(j, "convergence_tolerance", run.convergence_tolerance, unknown);
    read_key(j, "max_iterations", run.max_iterations, unknown);
    read_key(j, "iteration_tolerance", run.iteration_tolerance, unknown);
    read_key(j, "gibbs_tpr_strength", run.gibbs_tpr_strength, unknown);
    read_key(j, "gibbs_fpr_strength", run.gibbs_fpr_strength, unknown);
    read_key(j, "gibbs_prevalence_strength", run.gibbs_prevalence_strength, unknown);
    read_key(j, "gibbs_iterations", run.gibbs_iterations, unknown);
    read_key(j, "lambda_steps", run.lambda_steps, unknown);
    read_key(j, "seed", run.seed, unknown);
    if (synth != nullptr) {
        read_key(j, "n_sources", synth->n_sources, unknown);
        read_key(j, "n_attributes", synth->n_attributes, unknown);
        read_key(j, "values_min", synth->values_min, unknown);
        read_key(j, "values_max", synth->values_max, unknown);
        read_key(j, "claim_frequency_mean", synth->claim_frequency_mean, unknown);
        read_key(j, "claim_frequency_concentration", synth->claim_frequency_concentration,
                 unknown);
        read_key(j, "accuracy_mean", synth->accuracy_mean, unknown);
        read_key(j, "accuracy_concentration", synth->accuracy_concentration, unknown);
        read_key(j, "copy_probability", synth->copy_probability, unknown);
        synth->seed = run.seed;
    }
}

Json run_config_to_json(const RunConfig& cfg) {
    Json j;
    j["initial_tpr"] = cfg.initial_tpr;
    j["initial_fpr"] = cfg.initial_fpr;
    j["initial_prevalence"] = cfg.initial_prevalence;
    j["learning_rate_base"] = cfg.learning_rate_base;
    j["learning_rate_decay"] = cfg.learning_rate_decay;
    j["minibatch_size"] = cfg.minibatch_size;
    j["max_epochs"] = cfg.max_epochs;
    j["convergence_tolerance"] = cfg.convergence_tolerance;
    j["max_iterations"] = cfg.max_iterations;
    j["iteration_tolerance"] = cfg.iteration_tolerance;
    j["gibbs_tpr_strength"] = cfg.gibbs_tpr_strength;
    j["gibbs_fpr_strength"] = cfg.gibbs_fpr_strength;
    j["gibbs_prevalence_strength"] = cfg.gibbs_prevalence_strength;
    j["gibbs_iterations"] = cfg.gibbs_iterations;
    j["lambda_steps"] = cfg.lambda_steps;
    j["seed"] = cfg.seed;
    return j;
}

Json synth_config_to_json(const SynthConfig& cfg) {
    Json j;
    j["n_sources"] = cfg.n_sources;
    j["n_attributes"] = cfg.n_attributes;
    j["values_min"] = cfg.values_min;
    j["values_max"] = cfg.values_max;
    j["claim_frequency_mean"] = cfg.claim_frequency_mean;
    j["claim_frequency_concentration"] = cfg.claim_frequency_concentration;
    j["accuracy_mean"] = cfg.accuracy_mean;
    j["accuracy_concentration"] = cfg.accuracy_concentration;
    j["copy_probability"] = cfg.copy_probability;
    j["seed"] = cfg.seed;
    return j;
}

Json result_to_json(const Dataset& d, const DiscoveryResult& r, const Json& config_echo,
                    std::uint64_t seed) {
    Json j;
    j["algorithm"] = r.algorithm;
    Json facts = Json::array();
    for (FactId f = 0; f < d.fact_count(); ++f) {
        Json row;
        row["fact"] = d.fact_name(f);
        row["plausibility"] = r.estimate.plausibility[f];
        facts.push_back(std::move(row));
    }
    j["facts"] = std::move(facts);
    Json attributes = Json::array();
    if (d.categorical()) {
        for (AttributeId a = 0; a < d.attribute_count(); ++a) {
            const FactId w = r.estimate.winner[a];
            if (w == kNoId) continue;
            Json row;
            row["attribute"] = d.attribute_names()[a];
            row["value"] = d.value_names()[d.fact_value(w)];
            row["adjusted"] = r.estimate.adjusted[w];
            attributes.push_back(std::move(row));
        }
    }
    j["attributes"] = std::move(attributes);
    Json sources = Json::array();
    if (r.model) {
        for (SourceId s = 0; s < d.source_count(); ++s) {
            Json row;
            row["source"] = d.source_names()[s];
            row["tpr"] = r.model->tpr[s];
            row["fpr"] = r.model->fpr[s];
            sources.push_back(std::move(row));
        }
    }
    j["sources"] = std::move(sources);
    if (r.model && std::isfinite(r.model->prevalence)) {
        j["prevalence"] = r.model->prevalence;
    } else {
        j["prevalence"] = nullptr;
    }
    j["config_echo"] = config_echo;
    j["seed"] = seed;
    return j;
}

void write_result_files(const std::filesystem::path& path, const Dataset& d,
                        const DiscoveryResult& r, const Json& config_echo, std::uint64_t seed,
                        bool csv_variants) {
    write_text_file(path, result_to_json(d, r, config_echo, seed).dump(2) + "\n");
    if (!csv_variants) return;
    std::filesystem::path stem = path;
    stem.replace_extension();

    std::string facts = "fact,plausibility\n";
    for (FactId f = 0; f < d.fact_count(); ++f) {
        facts += csv_escape(d.fact_name(f)) + "," + format_double(r.estimate.plausibility[f]) +
                 "\n";
    }
    write_text_file(stem.string() + ".facts.csv", facts);

    std::string attrs = "attribute,value,adjusted\n";
    if (d.categorical()) {
        for (AttributeId a = 0; a < d.attribute_count(); ++a) {
            const FactId w = r.estimate.winner[a];
            if (w == kNoId) continue;
            attrs += csv_escape(d.attribute_names()[a]) + "," +
                     csv_escape(d.value_names()[d.fact_value(w)]) + "," +
                     format_double(r.estimate.adjusted[w]) + "\n";
        }
    }
    write_text_file(stem.string() + ".attributes.csv", attrs);

    std::string sources = "source,tpr,fpr\n";
    if (r.model) {
        for (SourceId s = 0; s < d.source_count(); ++s) {
            sources += csv_escape(d.source_names()[s]) + "," + format_double(r.model->tpr[s]) +
                       "," + format_double(r.model->fpr[s]) + "\n";
        }
    }
    write_text_file(stem.string() + ".sources.csv", sources);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string file_digest_hex(const std::filesystem::path& path) {
    const std::uint64_t h = fnv1a64(read_text_file(path));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void write_manifest(const std::filesystem::path& output_path, const std::string& command,
                    const Json& resolved_config, const std::vector<ManifestInput>& inputs,
                    std::uint64_t seed, double seconds) {
    Json j;
    j["command"] = command;
    j["version"] = kToolVersion;
    j["seed"] = seed;
    j["config"] = resolved_config;
    Json in = Json::array();
    for (const ManifestInput& i : inputs) {
        Json row;
        row["path"] = i.path;
        row["digest"] = i.digest;
        in.push_back(std::move(row));
    }
    j["inputs"] = std::move(in);
    j["timing_seconds"] = seconds;
    write_text_file(output_path.string() + ".manifest.json", j.dump(2) + "\n");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path.string());
    out << content;
    if (!out) throw InputError("write failed: " + path.string());
}

Json profiles_to_json(const SynthResult& r) {
    Json j;
    Json profiles = Json::array();
    for (const SourceProfile& p : r.profiles) {
        Json row;
        row["source"] = p.name;
        row["claim_frequency"] = p.claim_frequency;
        row["accuracy"] = p.accuracy;
        if (p.copies_from) {
            row["copies_from"] = "s" + std::to_string(*p.copies_from);
        } else {
            row["copies_from"] = nullptr;
        }
        row["copy_frequency"] = p.copies_from ? Json(p.copy_frequency) : Json(nullptr);
        row["claim_count"] = p.claim_count;
        row["copied_claims"] = p.copied_claims;
        profiles.push_back(std::move(row));
    }
    j["sources"] = std::move(profiles);
    j["total_claims"] = r.total_claims;
    j["copied_claims"] = r.copied_claims;
    j["copied_claim_frequency"] = measure_copy_frequency(r);
    const DatasetStats stats = dataset_stats(r.dataset);
    j["mean_normalized_entropy"] = stats.mean_entropy;
    if (stats.source_accuracy) {
        j["average_source_accuracy"] = *stats.source_accuracy;
    }
    return j;
}

} // namespace ltd

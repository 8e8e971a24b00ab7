#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/estimate.hpp"
#include "ltd/synthgen.hpp"

namespace ltd {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- CSV core

// RFC-4180-style parsing: quoted fields, doubled-quote escapes, LF or CRLF
// row endings. Returns one vector of fields per row; blank lines are
// dropped. Throws InputError with a line number on malformed quoting.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string csv_escape(const std::string& field);

// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double v);

// ------------------------------------------------------------- value hook

struct NormalizeOptions {
    bool enabled = false;  // trim, lowercase, collapse internal whitespace
    bool dates = false;    // additionally rewrite recognizable dates as ISO-8601
};

std::string normalize_value(const std::string& value, const NormalizeOptions& opts);

// ------------------------------------------------------------ claim files

// Claims CSV layouts, chosen by header row:
//   source,attribute,value   (categorical)
//   source,fact,polarity     (binary; polarity is 0 or 1)
// Truth CSV layouts:
//   attribute,value          (categorical)
//   fact,truth               (binary; truth is 0 or 1)
Dataset load_dataset(const std::filesystem::path& claims_path,
                     const std::optional<std::filesystem::path>& truth_path,
                     const NormalizeOptions& opts);

void write_claims_csv(const std::filesystem::path& path, const Dataset& d);
void write_truth_csv(const std::filesystem::path& path, const Dataset& d);

// ------------------------------------------------------------ config I/O

// JSON config, or a flat TOML subset when the extension is .toml:
// `key = value` lines with string/number/boolean values and # comments.
// Nested tables are rejected.
Json read_config_file(const std::filesystem::path& path);

// Apply recognized keys from a config object; unknown keys are an error.
// run_keys_only limits the accepted set for commands without a generator.
void apply_config(const Json& j, RunConfig& run, SynthConfig* synth);

Json run_config_to_json(const RunConfig& cfg);
Json synth_config_to_json(const SynthConfig& cfg);

// ----------------------------------------------------------- result files

Json result_to_json(const Dataset& d, const DiscoveryResult& r, const Json& config_echo,
                    std::uint64_t seed);

// Writes <path> (JSON); with csv_variants also <stem>.facts.csv,
// <stem>.attributes.csv, <stem>.sources.csv next to it.
void write_result_files(const std::filesystem::path& path, const Dataset& d,
                        const DiscoveryResult& r, const Json& config_echo, std::uint64_t seed,
                        bool csv_variants);

// --------------------------------------------------------------- manifest

std::uint64_t fnv1a64(std::string_view bytes);
std::string file_digest_hex(const std::filesystem::path& path);

struct ManifestInput {
    std::string path;
    std::string digest;
};

// Sidecar describing one tool invocation: <output>.manifest.json. Timing
// lives only here so result payloads stay byte-identical across runs.
void write_manifest(const std::filesystem::path& output_path, const std::string& command,
                    const Json& resolved_config, const std::vector<ManifestInput>& inputs,
                    std::uint64_t seed, double seconds);

// ------------------------------------------------------------------ misc

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

Json profiles_to_json(const SynthResult& r);

} // namespace ltd

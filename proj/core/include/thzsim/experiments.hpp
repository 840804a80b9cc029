// SPDX-License-Identifier: Apache-2.0
//
// thzsim — numerical simulator for THz near-field communications and sensing
// Copyright (C) 2026 thzsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THZSIM_EXPERIMENTS_HPP
#define THZSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace thzsim
{
    enum class ExperimentKind
    {
        fig2_gainmap,
        fig4a_se_vs_snr,
        fig4b_se_vs_ttd,
        fig5a_music,
        fig5b_rcrb,
        custom
    };

    const char *to_string(ExperimentKind kind);
    std::optional<ExperimentKind> experiment_from_string(const std::string &name);

    // Fully-defaulted, validated experiment parameters. Angles cross this
    // boundary in degrees and are converted to radians inside the runners.
    struct ExperimentConfig
    {
        ExperimentKind experiment = ExperimentKind::fig2_gainmap;
        std::uint64_t seed = 12345;
        std::string output_dir = "out";

        // Shared physics
        double center_frequency_hz = 1.0e11;
        double bandwidth_hz = 1.0e10;
        std::size_t subcarrier_count = 10;
        double noise_power_w = 1.0;

        // Transmit array / link geometry
        std::size_t tx_count = 128;
        double tx_spacing_wavelengths = 0.5;
        std::size_t rx_count = 4;
        double rx_spacing_wavelengths = 16.0;
        double rx_orientation_deg = 0.0;
        double user_angle_deg = 30.0;
        double user_distance_m = 15.0;

        // Hybrid architecture
        std::size_t rf_chain_count = 4;
        std::size_t stream_count = 4;
        std::size_t ttd_per_chain = 16;
        double max_delay_aperture_multiples = 2.0;

        // fig2_gainmap
        double focus_angle_deg = 0.0;
        double focus_distance_m = 10.0;
        double angle_min_deg = -90.0;
        double angle_max_deg = 90.0;
        double angle_step_deg = 0.25;
        double distance_min_m = 1.0;
        double distance_max_m = 400.0;
        std::size_t distance_count = 400; // log-spaced

        // fig4a_se_vs_snr
        double snr_min_db = -10.0;
        double snr_max_db = 20.0;
        double snr_step_db = 5.0;

        // fig4b_se_vs_ttd
        double snr_db = 10.0;
        std::vector<std::size_t> ttd_counts = {2, 4, 8, 16, 32};

        // fig5a_music / fig5b_rcrb
        std::size_t sensing_element_count = 256;
        double target_angle_deg = 45.0;
        double target_distance_m = 20.0;
        std::size_t snapshot_count = 200;
        double signal_power_w = 100.0;
        double music_angle_step_deg = 0.1;
        double music_distance_min_m = 5.0;
        double music_distance_max_m = 50.0;
        double music_distance_step_m = 0.1;
        double sweep_distance_min_m = 5.0;
        double sweep_distance_max_m = 100.0;
        std::size_t sweep_distance_count = 24; // log-spaced

        // custom (beam-trajectory sweep)
        std::string trajectory_scheme = "hts"; // "hts" or "ps_only"
        double search_angle_halfspan_deg = 10.0;
        double search_angle_step_deg = 0.25;
        double search_distance_min_m = 5.0;
        double search_distance_max_m = 50.0;
        std::size_t search_distance_count = 60; // log-spaced
    };

    struct ValidationIssue
    {
        std::string key;
        std::string message;
    };

    struct ValidationResult
    {
        std::optional<ExperimentConfig> config; // set iff errors is empty
        std::vector<ValidationIssue> errors;    // all violations, not first-failure
    };

    // Parses the flat `key = value` configuration text ('#' starts a
    // comment). Unknown keys for the selected experiment are errors.
    ValidationResult validate_config(const std::string &config_text);

    // Blank cells render as empty CSV fields (used where a value is
    // undefined, e.g. the distance bound of the angle-only model).
    struct BlankCell
    {
    };
    using Cell = std::variant<double, std::string, BlankCell>;

    class ResultTable
    {
      public:
        ResultTable(std::vector<std::string> columns, std::vector<std::string> header_comments);

        void append(std::vector<Cell> row); // throws on NaN/Inf or arity mismatch

        const std::vector<std::string> &columns() const { return columns_; }
        std::size_t row_count() const { return rows_.size(); }
        const std::vector<std::vector<Cell>> &rows() const { return rows_; }

        // Deterministic rendering: '#' comment lines, header row, then data
        // rows with doubles printed via "%.12g".
        std::string to_csv() const;

      private:
        std::vector<std::string> columns_;
        std::vector<std::string> comments_;
        std::vector<std::vector<Cell>> rows_;
    };

    struct RunSummary
    {
        std::string csv_path;
        std::string manifest_path;
        std::size_t rows_written = 0;
        std::vector<std::string> warnings; // e.g. flagged non-converged rows
    };

    // Computes the experiment, writes <experiment>.csv plus
    // <experiment>_manifest.json into config.output_dir and returns the
    // paths. Output data depend only on (config, seed).
    RunSummary run_experiment(const ExperimentConfig &config);

    // In-memory variant used by tests; no filesystem access.
    ResultTable compute_experiment(const ExperimentConfig &config,
                                   std::vector<std::string> *warnings = nullptr);

    // Stable listing of the available presets, one line each.
    std::string list_experiments();

    // FNV-1a hash of the canonical serialized parameter set.
    std::string config_hash(const ExperimentConfig &config);

    inline constexpr const char *tool_version = "0.1.0";

} // namespace thzsim

// Shared builders so tests and tools assemble the exact committed setup.
#include "thzsim/channel.hpp"
#include "thzsim/hybrid.hpp"

namespace thzsim
{
    ArrayGeometry experiment_tx_geometry(const ExperimentConfig &config);
    ArrayGeometry experiment_rx_geometry(const ExperimentConfig &config);
    PolarLocation experiment_user(const ExperimentConfig &config);

    // LoS wideband channel of the committed link, center-normalized to
    // ||H_center||_F^2 = tx_count * rx_count.
    WidebandChannelSet experiment_channels(const ExperimentConfig &config);

    // ttd_override = 0 keeps config.ttd_per_chain.
    ArchitectureConfig experiment_architecture(const ExperimentConfig &config,
                                               ArchitectureKind kind,
                                               std::size_t ttd_override = 0);

} // namespace thzsim

#endif

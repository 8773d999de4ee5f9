// Copyright 2026 The qblock Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * QPE benchmark sweep: grid over (qubits, block size), median of repeated
 * runs, CSV/JSON records.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "errors.hpp"
#include "run.hpp"

namespace qblock::bench {

enum class Precision { Single, Double };
enum class EngineSelection { Dense, Blocked, Both };

/// Exact CSV header, column order included.
inline constexpr std::string_view csv_header =
    "n_qubits,block_size,engine,precision,wall_time_s,swap_count,gate_count,"
    "reps,aggregation";

/// One aggregated benchmark measurement.
struct RunRecord {
    unsigned n_qubits{0};
    std::optional<unsigned> block_size; ///< nullopt for the dense engine
    EngineKind engine{EngineKind::Dense};
    Precision precision{Precision::Double};
    double wall_time_s{0.0};
    std::uint64_t swap_count{0};
    std::uint64_t gate_count{0};
    unsigned reps{1};
    std::string aggregation{"median"};

    bool operator==(const RunRecord &) const = default;
};

/// Inclusive integer range "A..B" (or a single "A").
struct Range {
    unsigned lo{0};
    unsigned hi{0};

    static Range parse(std::string_view text) {
        auto to_uint = [&](std::string_view s) {
            unsigned v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
                throw InvalidArgument("bad range '" + std::string(text) + "'");
            }
            return v;
        };
        Range r;
        if (auto dots = text.find(".."); dots != std::string_view::npos) {
            r = {to_uint(text.substr(0, dots)), to_uint(text.substr(dots + 2))};
        } else {
            r.lo = r.hi = to_uint(text);
        }
        if (r.lo > r.hi) {
            throw InvalidArgument("empty range '" + std::string(text) + "'");
        }
        return r;
    }
};

struct SweepConfig {
    Range qubits{4, 10};              ///< total simulated qubits (counting + 1)
    std::optional<Range> block_sizes; ///< l values; nullopt means "none"
    EngineSelection engine{EngineSelection::Dense};
    Precision precision{Precision::Double};
    unsigned reps{3};
    double cooldown_s{2.0};
    std::size_t top_k{1};
    std::uint64_t max_amps{std::uint64_t{1} << 28};
};

inline std::string_view to_string(EngineKind e) {
    return e == EngineKind::Dense ? "dense" : "blocked";
}
inline std::string_view to_string(Precision p) {
    return p == Precision::Single ? "single" : "double";
}

inline double median(std::vector<double> v) {
    if (v.empty()) {
        throw InvalidArgument("median of an empty sample");
    }
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

/// Bytes needed for the state vector of an n-qubit run.
inline std::uint64_t state_bytes(unsigned n, Precision p) {
    const std::uint64_t amp = p == Precision::Single ? 8 : 16;
    return (std::uint64_t{1} << n) * amp;
}

/// Throws on malformed grids and on grids that exceed the amplitude cap.
inline void validate(const SweepConfig &cfg) {
    if (cfg.qubits.lo < 2) {
        throw InvalidArgument("--qubits: QPE needs at least 2 qubits");
    }
    if (cfg.qubits.hi >= 63) {
        throw CapacityError("--qubits: " + std::to_string(cfg.qubits.hi) +
                            " qubits cannot be addressed");
    }
    if (cfg.reps < 1) {
        throw InvalidArgument("--reps must be >= 1");
    }
    if (cfg.cooldown_s < 0) {
        throw InvalidArgument("--cooldown must be >= 0");
    }
    if (cfg.engine != EngineSelection::Dense) {
        if (!cfg.block_sizes) {
            throw InvalidArgument("blocked engine requires --block-size A..B");
        }
        if (cfg.block_sizes->lo < 1) {
            throw InvalidArgument("--block-size must be >= 1");
        }
    }
    const unsigned n = cfg.qubits.hi;
    if ((std::uint64_t{1} << n) > cfg.max_amps) {
        throw CapacityError(
            "grid needs 2^" + std::to_string(n) + " amplitudes (" +
            std::to_string(state_bytes(n, cfg.precision)) +
            " bytes), above the cap of " + std::to_string(cfg.max_amps) +
            " amplitudes; raise --max-amps to override");
    }
}

namespace detail {

template <std::floating_point Real>
RunRecord measure(const SweepConfig &cfg, unsigned n, EngineConfig engine,
                  bool &first_run) {
    const Circuit circuit = qpe_circuit(n - 1);
    RunOptions opts;
    opts.full_probabilities = false;
    opts.top_k = std::max<std::size_t>(cfg.top_k, 1);
    opts.max_qubits = 62;

    std::vector<double> times;
    Metrics metrics;
    for (unsigned r = 0; r < cfg.reps; ++r) {
        if (!first_run && cfg.cooldown_s > 0) {
            std::this_thread::sleep_for(
                std::chrono::duration<double>(cfg.cooldown_s));
        }
        first_run = false;
        const auto result = run<Real>(circuit, engine, opts);
        if (result.top.empty() || counting_value(result.top[0].index, n - 1) != 1) {
            throw std::runtime_error("QPE readout mismatch at " +
                                     std::to_string(n) + " qubits");
        }
        times.push_back(std::max(result.metrics.wall_time, 1e-9));
        metrics = result.metrics;
    }

    RunRecord rec;
    rec.n_qubits = n;
    if (engine.kind == EngineKind::Blocked) {
        rec.block_size = engine.local;
    }
    rec.engine = engine.kind;
    rec.precision = cfg.precision;
    rec.wall_time_s = median(std::move(times));
    rec.swap_count = metrics.swap_count;
    rec.gate_count = metrics.gate_count;
    rec.reps = cfg.reps;
    return rec;
}

} // namespace detail

/**
 * Runs the QPE benchmark over the configured grid. Block sizes above n are
 * skipped. `on_record` is invoked after each grid point.
 */
inline std::vector<RunRecord>
run_sweep(const SweepConfig &cfg,
          const std::function<void(const RunRecord &)> &on_record = {}) {
    validate(cfg);
    std::vector<RunRecord> out;
    bool first_run = true;
    auto one = [&](unsigned n, EngineConfig engine) {
        RunRecord rec =
            cfg.precision == Precision::Single
                ? detail::measure<float>(cfg, n, engine, first_run)
                : detail::measure<double>(cfg, n, engine, first_run);
        if (on_record) {
            on_record(rec);
        }
        out.push_back(std::move(rec));
    };
    for (unsigned n = cfg.qubits.lo; n <= cfg.qubits.hi; ++n) {
        if (cfg.engine != EngineSelection::Blocked) {
            one(n, EngineConfig::dense());
        }
        if (cfg.engine != EngineSelection::Dense) {
            const unsigned hi = std::min(cfg.block_sizes->hi, n);
            for (unsigned l = cfg.block_sizes->lo; l <= hi; ++l) {
                one(n, EngineConfig::blocked(l));
            }
        }
    }
    return out;
}

/// Per-n block size with the shortest wall time; ties go to the larger block.
inline std::map<unsigned, unsigned> best_block(const std::vector<RunRecord> &records) {
    if (records.empty()) {
        throw InvalidArgument("best_block: no records");
    }
    std::map<unsigned, std::pair<double, unsigned>> best;
    for (const auto &r : records) {
        if (!r.block_size) {
            continue;
        }
        auto [it, inserted] =
            best.try_emplace(r.n_qubits, r.wall_time_s, *r.block_size);
        if (inserted) {
            continue;
        }
        auto &[t, l] = it->second;
        if (r.wall_time_s < t || (r.wall_time_s == t && *r.block_size > l)) {
            t = r.wall_time_s;
            l = *r.block_size;
        }
    }
    if (best.empty()) {
        throw InvalidArgument("best_block: no blocked-engine records");
    }
    std::map<unsigned, unsigned> out;
    for (const auto &[n, tl] : best) {
        out[n] = tl.second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_seconds(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

inline EngineKind parse_engine(std::string_view s) {
    if (s == "dense") {
        return EngineKind::Dense;
    }
    if (s == "blocked") {
        return EngineKind::Blocked;
    }
    throw InvalidArgument("unknown engine '" + std::string(s) + "'");
}

inline Precision parse_precision(std::string_view s) {
    if (s == "single") {
        return Precision::Single;
    }
    if (s == "double") {
        return Precision::Double;
    }
    throw InvalidArgument("unknown precision '" + std::string(s) + "'");
}

template <class T> T parse_number(std::string_view s) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
        throw InvalidArgument("bad number '" + std::string(s) + "'");
    }
    return v;
}

} // namespace detail

inline void write_csv(std::ostream &os, const std::vector<RunRecord> &records) {
    os << csv_header << '\n';
    for (const auto &r : records) {
        os << r.n_qubits << ','
           << (r.block_size ? std::to_string(*r.block_size) : "none") << ','
           << to_string(r.engine) << ',' << to_string(r.precision) << ','
           << detail::format_seconds(r.wall_time_s) << ',' << r.swap_count << ','
           << r.gate_count << ',' << r.reps << ',' << r.aggregation << '\n';
    }
}

inline std::vector<RunRecord> read_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != csv_header) {
        throw InvalidArgument("CSV header mismatch");
    }
    std::vector<RunRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            f.push_back(cell);
        }
        if (f.size() != 9) {
            throw InvalidArgument("CSV row has " + std::to_string(f.size()) +
                                  " fields, expected 9");
        }
        RunRecord r;
        r.n_qubits = detail::parse_number<unsigned>(f[0]);
        if (f[1] != "none") {
            r.block_size = detail::parse_number<unsigned>(f[1]);
        }
        r.engine = detail::parse_engine(f[2]);
        r.precision = detail::parse_precision(f[3]);
        r.wall_time_s = detail::parse_number<double>(f[4]);
        r.swap_count = detail::parse_number<std::uint64_t>(f[5]);
        r.gate_count = detail::parse_number<std::uint64_t>(f[6]);
        r.reps = detail::parse_number<unsigned>(f[7]);
        r.aggregation = f[8];
        out.push_back(std::move(r));
    }
    return out;
}

inline nlohmann::ordered_json to_json(const std::vector<RunRecord> &records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        arr.push_back({
            {"n_qubits", r.n_qubits},
            {"block_size", r.block_size ? nlohmann::ordered_json(*r.block_size)
                                        : nlohmann::ordered_json("none")},
            {"engine", to_string(r.engine)},
            {"precision", to_string(r.precision)},
            {"wall_time_s", r.wall_time_s},
            {"swap_count", r.swap_count},
            {"gate_count", r.gate_count},
            {"reps", r.reps},
            {"aggregation", r.aggregation},
        });
    }
    return arr;
}

inline std::vector<RunRecord> from_json(const nlohmann::ordered_json &arr) {
    if (!arr.is_array()) {
        throw InvalidArgument("JSON records must be an array");
    }
    std::vector<RunRecord> out;
    try {
        for (const auto &o : arr) {
            RunRecord r;
            r.n_qubits = o.at("n_qubits").get<unsigned>();
            const auto &bs = o.at("block_size");
            if (!(bs.is_string() && bs.get<std::string>() == "none")) {
                r.block_size = bs.get<unsigned>();
            }
            r.engine = detail::parse_engine(o.at("engine").get<std::string>());
            r.precision =
                detail::parse_precision(o.at("precision").get<std::string>());
            r.wall_time_s = o.at("wall_time_s").get<double>();
            r.swap_count = o.at("swap_count").get<std::uint64_t>();
            r.gate_count = o.at("gate_count").get<std::uint64_t>();
            r.reps = o.at("reps").get<unsigned>();
            r.aggregation = o.at("aggregation").get<std::string>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("malformed JSON record: ") + e.what());
    }
    return out;
}

enum class Format { Csv, Json };

inline void write(std::ostream &os, const std::vector<RunRecord> &records,
                  Format format) {
    if (format == Format::Csv) {
        write_csv(os, records);
    } else {
        os << to_json(records).dump(2) << '\n';
    }
}

/// Writes records to `path`; I/O failures raise IoError naming the path.
inline void emit(const std::vector<RunRecord> &records, Format format,
                 const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write(out, records, format);
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace qblock::bench

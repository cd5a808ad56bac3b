/*
* Copyright (C) 2026 evsim contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#pragma once

#include "evsim/adoption.hpp"
#include "evsim/scenario.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evsim
{

/// Declaration order is the execution priority among events at the same minute.
enum class EventKind : std::uint8_t
{
    Commute,
    WomDelivery,
    AdExposure,
    MetricsTick,
};

struct SimEvent
{
    std::int64_t minute = 0;
    EventKind kind = EventKind::Commute;
    std::uint64_t seq = 0;
    std::int32_t a = 0; ///< Commute: leg 0..3; WomDelivery: source; AdExposure: agent; MetricsTick: day
    std::int32_t b = 0; ///< WomDelivery: recipient
};

/// Min-queue ordered by (minute, kind, seq). seq is assigned on push, so
/// equal-time equal-kind events run in scheduling order.
class EventQueue
{
public:
    /// Throws ProtocolError when scheduling into the past.
    void push(std::int64_t minute, EventKind kind, std::int32_t a = 0, std::int32_t b = 0);
    SimEvent pop();

    bool empty() const noexcept { return m_heap.empty(); }
    std::size_t size() const noexcept { return m_heap.size(); }
    std::int64_t now() const noexcept { return m_now; }

private:
    struct Later
    {
        bool operator()(const SimEvent& x, const SimEvent& y) const noexcept
        {
            if (x.minute != y.minute) {
                return x.minute > y.minute;
            }
            if (x.kind != y.kind) {
                return x.kind > y.kind;
            }
            return x.seq > y.seq;
        }
    };

    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> m_heap;
    std::uint64_t m_next_seq = 0;
    std::int64_t m_now = 0;
};

struct DayRecord
{
    int day = 0;
    int ev_count = 0;
    int new_adopters = 0;
    double revenue = 0.0;
    double energy_proxy = 0.0;
    int peak_occupancy = 0;
    int rejections = 0;

    friend bool operator==(const DayRecord&, const DayRecord&) = default;
};

using MetricsSeries = std::vector<DayRecord>;

enum class Metric : std::uint8_t
{
    EvCount,
    NewAdopters,
    Revenue,
    EnergyProxy,
    PeakOccupancy,
    Rejections,
};

inline constexpr std::array<Metric, 6> kAllMetrics{Metric::EvCount,     Metric::NewAdopters,   Metric::Revenue,
                                                   Metric::EnergyProxy, Metric::PeakOccupancy, Metric::Rejections};

std::string_view metric_name(Metric m);
double metric_value(const DayRecord& record, Metric m);

struct AdoptionRecord
{
    int agent = 0;
    std::int64_t minute = 0;
    TriggerKind via = TriggerKind::Ad;

    friend bool operator==(const AdoptionRecord&, const AdoptionRecord&) = default;
};

struct RunStats
{
    std::uint64_t events = 0;
    std::uint64_t wom_messages = 0;
    std::uint64_t ad_exposures = 0;
    /// End-of-day lot/agent audits that passed (one per simulated day).
    std::uint64_t audits = 0;
    /// Occupancy-conservation checks after commute transitions.
    std::uint64_t occupancy_checks = 0;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct RunResult
{
    MetricsSeries series;
    int final_ev_count = 0;
    std::uint64_t seed = 0;
    std::string scenario_digest;
    /// Agents as sampled at the start of the run.
    std::vector<CarOwner> initial_population;
    /// Adoptions in execution order.
    std::vector<AdoptionRecord> adoptions;
    RunStats stats;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Simulates config.horizon_days days. Deterministic in (config, seed).
/// Throws ConfigError for an invalid config and ProtocolError (with event
/// time and agent) if a state-chart message is rejected.
RunResult run(const ScenarioConfig& config, std::uint64_t seed);

/// Per-day sample mean and standard deviation (n - 1 denominator; 0 for a
/// single run) of every metric.
struct AggregateSeries
{
    std::size_t runs = 0;
    std::array<std::vector<double>, kAllMetrics.size()> mean;
    std::array<std::vector<double>, kAllMetrics.size()> std;

    std::size_t days() const { return mean[0].size(); }
    const std::vector<double>& mean_of(Metric m) const { return mean[static_cast<std::size_t>(m)]; }
    const std::vector<double>& std_of(Metric m) const { return std[static_cast<std::size_t>(m)]; }
};

/// Values are sorted before summation, so the result does not depend on
/// the order of `runs`. All runs must cover the same days.
AggregateSeries aggregate(std::span<const RunResult> runs);

struct ReplicationBatch
{
    std::vector<RunResult> runs; ///< indexed by replication
    AggregateSeries aggregate;
};

/// Replication r runs with replication_seed(base_seed, r). `threads` = 0
/// picks the hardware concurrency; results do not depend on it. The first
/// failing replication (by index) fails the batch.
ReplicationBatch run_replications(const ScenarioConfig& config, std::uint64_t base_seed, std::size_t n_reps,
                                  unsigned threads = 0);

} // namespace evsim

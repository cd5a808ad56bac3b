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
#include "evsim/engine.hpp"
#include "evsim/errors.hpp"
#include "evsim/mobility.hpp"
#include "evsim/population.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace evsim
{

void EventQueue::push(std::int64_t minute, EventKind kind, std::int32_t a, std::int32_t b)
{
    if (minute < m_now) {
        throw ProtocolError("event scheduled before the current time", minute);
    }
    m_heap.push(SimEvent{minute, kind, m_next_seq++, a, b});
}

SimEvent EventQueue::pop()
{
    SimEvent e = m_heap.top();
    m_heap.pop();
    m_now = e.minute;
    return e;
}

std::string_view metric_name(Metric m)
{
    switch (m) {
    case Metric::EvCount:
        return "ev_count";
    case Metric::NewAdopters:
        return "new_adopters";
    case Metric::Revenue:
        return "revenue";
    case Metric::EnergyProxy:
        return "energy_proxy";
    case Metric::PeakOccupancy:
        return "peak_occupancy";
    case Metric::Rejections:
        return "rejections";
    }
    return "?";
}

double metric_value(const DayRecord& r, Metric m)
{
    switch (m) {
    case Metric::EvCount:
        return r.ev_count;
    case Metric::NewAdopters:
        return r.new_adopters;
    case Metric::Revenue:
        return r.revenue;
    case Metric::EnergyProxy:
        return r.energy_proxy;
    case Metric::PeakOccupancy:
        return r.peak_occupancy;
    case Metric::Rejections:
        return r.rejections;
    }
    return 0.0;
}

namespace
{

class Simulation
{
public:
    Simulation(const ScenarioConfig& config, std::uint64_t seed)
        : m_config(config)
        , m_rng(seed)
        , m_lot(config.lot_capacity)
        , m_horizon_minutes(static_cast<std::int64_t>(config.horizon_days) * kMinutesPerDay)
    {
        m_result.seed = seed;
        m_result.scenario_digest = scenario_digest(config);
        m_owners = sample_population(config.population, config.adoption.adoption_fraction, m_rng);
        m_result.initial_population = m_owners;
        m_stereotype_of.reserve(m_owners.size());
        for (const auto& owner : m_owners) {
            m_stereotype_of.push_back(&find_stereotype(config.population, owner.stereotype_id));
        }
        m_rejected_today.assign(m_owners.size(), 0);
        m_commute_template = commute_events(0, config.calendar, 0);
    }

    RunResult run()
    {
        if (m_config.horizon_days > 0) {
            for (const auto& owner : m_owners) {
                schedule_ad(owner.id, 0);
            }
            schedule_day(0);
        }
        while (!m_queue.empty()) {
            const SimEvent e = m_queue.pop();
            ++m_result.stats.events;
            try {
                dispatch(e);
            }
            catch (const ProtocolError& err) {
                throw ProtocolError(err.detail(), e.minute, err.agent());
            }
        }
        m_result.final_ev_count = m_ev_count;
        return std::move(m_result);
    }

private:
    void dispatch(const SimEvent& e)
    {
        switch (e.kind) {
        case EventKind::Commute:
            on_commute(e.minute, static_cast<std::size_t>(e.a));
            break;
        case EventKind::WomDelivery:
            on_wom(e.minute, e.a, e.b);
            break;
        case EventKind::AdExposure:
            on_ad(e.minute, e.a);
            break;
        case EventKind::MetricsTick:
            on_tick(e.a);
            break;
        }
    }

    static int day_of(std::int64_t minute) { return static_cast<int>(minute / kMinutesPerDay); }

    void schedule_ad(int owner_id, std::int64_t now)
    {
        const auto gap_days = next_ad_exposure(m_config.adoption, m_rng);
        if (!gap_days) {
            return;
        }
        const double gap_minutes = std::ceil(*gap_days * static_cast<double>(kMinutesPerDay));
        if (!(gap_minutes < static_cast<double>(m_horizon_minutes - now))) {
            return;
        }
        m_queue.push(now + std::max<std::int64_t>(1, static_cast<std::int64_t>(gap_minutes)), EventKind::AdExposure,
                     owner_id);
    }

    void schedule_day(int day)
    {
        const std::int64_t base = static_cast<std::int64_t>(day) * kMinutesPerDay;
        const bool workday = m_config.calendar.is_workday(day);
        if (workday) {
            for (std::size_t leg = 0; leg < m_commute_template.size(); ++leg) {
                m_queue.push(base + m_commute_template[leg].minute, EventKind::Commute, static_cast<std::int32_t>(leg));
            }
        }
        // Adopters talk while at work on workdays and at home otherwise.
        const std::int64_t wom_minute =
            base + (workday ? (m_config.calendar.arrive_work_minute() + m_config.calendar.depart_work_minute) / 2
                            : 12 * 60);
        for (const auto& owner : m_owners) {
            if (!owner.vehicle.is_electric()) {
                continue;
            }
            for (int target : wom_contacts(owner.id, m_owners.size(), m_config.adoption, m_rng)) {
                m_queue.push(wom_minute, EventKind::WomDelivery, owner.id, target);
            }
        }
        m_queue.push(base + kMinutesPerDay - 1, EventKind::MetricsTick, day);
    }

    void on_commute(std::int64_t minute, std::size_t leg)
    {
        const CommuteEvent& step = m_commute_template[leg];
        for (auto& owner : m_owners) {
            if (owner.commute_state != step.from) {
                throw ProtocolError("commute transition from " + std::string(to_string(owner.commute_state)) +
                                        ", expected " + std::string(to_string(step.from)),
                                    minute, owner.id);
            }
            owner.commute_state = step.to;
            const auto idx = static_cast<std::size_t>(owner.id);
            if (step.action == LotAction::RequestSpace) {
                const bool parked = m_lot.request_space(owner.id).has_value();
                m_rejected_today[idx] = parked ? 0 : 1;
                if (!parked) {
                    ++m_day.rejections;
                }
                m_commuters.push_back(Commuter{owner.vehicle, owner.staff_level, parked});
            }
            else if (step.action == LotAction::ReleaseSpace) {
                if (m_rejected_today[idx] == 0) {
                    m_lot.release_space(owner.id);
                }
                else if (m_lot.space_of(owner.id)) {
                    throw ProtocolError("rejected owner holds a space", minute, owner.id);
                }
            }
        }
        m_day.peak_occupancy = std::max(m_day.peak_occupancy, static_cast<int>(m_lot.occupied_count()));
        check_occupancy(minute);
    }

    void check_occupancy(std::int64_t minute)
    {
        std::size_t parked_at_work = 0;
        for (const auto& owner : m_owners) {
            if (owner.commute_state == CommuteState::AtWork && m_rejected_today[static_cast<std::size_t>(owner.id)] == 0) {
                ++parked_at_work;
            }
        }
        if (parked_at_work != m_lot.occupied_count()) {
            throw ProtocolError("occupied spaces (" + std::to_string(m_lot.occupied_count()) +
                                    ") != parked agents at work (" + std::to_string(parked_at_work) + ")",
                                minute);
        }
        ++m_result.stats.occupancy_checks;
    }

    void on_wom(std::int64_t minute, int source_id, int target_id)
    {
        const CarOwner& source = m_owners[static_cast<std::size_t>(source_id)];
        if (source.commute_state != CommuteState::AtHome && source.commute_state != CommuteState::AtWork) {
            throw ProtocolError("word-of-mouth contact while commuting", minute, source_id);
        }
        ++m_result.stats.wom_messages;
        CarOwner& target = m_owners[static_cast<std::size_t>(target_id)];
        if (target.vehicle.is_electric()) {
            return;
        }
        if (decide(target, PurchaseTrigger::wom(source, day_of(minute)))) {
            record_adoption(target.id, minute, TriggerKind::WomMessage);
        }
    }

    void on_ad(std::int64_t minute, int owner_id)
    {
        CarOwner& owner = m_owners[static_cast<std::size_t>(owner_id)];
        if (owner.vehicle.is_electric()) {
            return;
        }
        ++m_result.stats.ad_exposures;
        if (decide(owner, PurchaseTrigger::ad(day_of(minute)))) {
            record_adoption(owner_id, minute, TriggerKind::Ad);
        }
        else {
            schedule_ad(owner_id, minute);
        }
    }

    bool decide(CarOwner& owner, const PurchaseTrigger& trigger)
    {
        return decide_purchase(owner, trigger, *m_stereotype_of[static_cast<std::size_t>(owner.id)], m_config.tariff,
                               m_config.adoption, m_rng);
    }

    void record_adoption(int owner_id, std::int64_t minute, TriggerKind via)
    {
        ++m_ev_count;
        ++m_day.new_adopters;
        m_result.adoptions.push_back(AdoptionRecord{owner_id, minute, via});
    }

    void on_tick(int day)
    {
        const DailyAccrual accrual = accrue_day(m_commuters, m_config.tariff, m_config.energy);
        m_day.day = day;
        m_day.ev_count = m_ev_count;
        m_day.revenue = accrual.revenue;
        m_day.energy_proxy = accrual.energy_proxy;
        m_result.series.push_back(m_day);
        m_day = DayRecord{};
        m_commuters.clear();

        audit_day_end(day);

        if (day + 1 < m_config.horizon_days) {
            schedule_day(day + 1);
        }
    }

    void audit_day_end(int day)
    {
        const std::int64_t minute = static_cast<std::int64_t>(day) * kMinutesPerDay + kMinutesPerDay - 1;
        m_lot.audit();
        if (m_lot.occupied_count() != 0) {
            throw ProtocolError("parking lot not empty at end of day", minute);
        }
        for (const auto& owner : m_owners) {
            if (owner.commute_state != CommuteState::AtHome) {
                throw ProtocolError("owner not at home at end of day", minute, owner.id);
            }
        }
        ++m_result.stats.audits;
    }

    const ScenarioConfig& m_config;
    Rng m_rng;
    std::vector<CarOwner> m_owners;
    std::vector<const StereotypeSpec*> m_stereotype_of;
    ParkingLot m_lot;
    EventQueue m_queue;
    std::vector<CommuteEvent> m_commute_template;
    std::vector<std::uint8_t> m_rejected_today;
    std::vector<Commuter> m_commuters;
    std::int64_t m_horizon_minutes;
    int m_ev_count = 0;
    DayRecord m_day;
    RunResult m_result;
};

} // namespace

RunResult run(const ScenarioConfig& config, std::uint64_t seed)
{
    validate(config);
    Simulation sim(config, seed);
    return sim.run();
}

AggregateSeries aggregate(std::span<const RunResult> runs)
{
    AggregateSeries out;
    out.runs = runs.size();
    if (runs.empty()) {
        return out;
    }
    const std::size_t days = runs.front().series.size();
    for (const auto& r : runs) {
        if (r.series.size() != days) {
            throw DomainError("aggregate: runs cover different numbers of days");
        }
    }
    const auto n = static_cast<double>(runs.size());
    std::vector<double> values(runs.size());
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
        out.mean[m].resize(days);
        out.std[m].resize(days);
        for (std::size_t d = 0; d < days; ++d) {
            for (std::size_t r = 0; r < runs.size(); ++r) {
                values[r] = metric_value(runs[r].series[d], kAllMetrics[m]);
            }
            std::sort(values.begin(), values.end());
            double sum = 0.0;
            for (double v : values) {
                sum += v;
            }
            const double mean = sum / n;
            double sq = 0.0;
            for (double v : values) {
                sq += (v - mean) * (v - mean);
            }
            out.mean[m][d] = mean;
            out.std[m][d] = runs.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
        }
    }
    return out;
}

ReplicationBatch run_replications(const ScenarioConfig& config, std::uint64_t base_seed, std::size_t n_reps,
                                  unsigned threads)
{
    if (n_reps < 1) {
        throw ConfigError("run.replications", "must be at least 1");
    }
    validate(config);
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_reps));

    ReplicationBatch batch;
    batch.runs.resize(n_reps);
    std::vector<std::exception_ptr> errors(n_reps);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t r = next++; r < n_reps; r = next++) {
            try {
                batch.runs[r] = run(config, replication_seed(base_seed, r));
            }
            catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    batch.aggregate = aggregate(batch.runs);
    return batch;
}

} // namespace evsim

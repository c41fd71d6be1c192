#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "patex/layout/geometry.hpp"
#include "patex/layout/selection.hpp"
#include "patex/layout/seriation.hpp"
#include "patex/layout/stress.hpp"
#include "patex/motif/mine.hpp"
#include "patex/util/hash.hpp"

namespace patex {

/// One uploaded network and everything derived from it. Each artifact is
/// computed on first use, at most once even under concurrent requests.
class NetworkEntry {
public:
    NetworkEntry(std::string id, Network net) : id_(std::move(id)), net_(std::move(net)) {}

    const std::string& id() const { return id_; }
    const Network& network() const { return net_; }

    /// Fixed per id so views are reproducible.
    std::uint64_t layout_seed() const { return fnv1a64(id_); }

    const NodeOrdering& ordering() const {
        std::call_once(ordering_once_, [&] { ordering_.emplace(barycenter_order(net_)); });
        return *ordering_;
    }

    const NodeCoordinates& coordinates() const {
        std::call_once(coords_once_, [&] { coords_.emplace(force_layout(net_, layout_seed())); });
        return *coords_;
    }

    /// Geometry on the default canvas. Throws NotTemporal for time-arcs on a
    /// plain network; the failure is not cached, it is simply raised again.
    const MarkGeometry& geometry(Viz viz) const {
        auto& v = views_[static_cast<std::size_t>(viz)];
        std::call_once(v.once, [&] {
            if (viz == Viz::TimeArcs && !net_.temporal()) return;
            v.geometry.emplace(mark_geometry(net_, viz, &ordering(), &coordinates()));
            v.bytes = to_json(*v.geometry).dump();
            v.resolver = std::make_unique<SelectionResolver>(*v.geometry);
        });
        if (!v.geometry) throw NotTemporal("time-arcs view needs a temporal network");
        return *v.geometry;
    }

    MarkGeometry geometry(Viz viz, Canvas canvas) const {
        return mark_geometry(net_, viz, &ordering(), &coordinates(), canvas);
    }

    const std::string& geometry_bytes(Viz viz) const {
        geometry(viz);
        return views_[static_cast<std::size_t>(viz)].bytes;
    }

    const SelectionResolver& resolver(Viz viz) const {
        geometry(viz);
        return *views_[static_cast<std::size_t>(viz)].resolver;
    }

    const MiningResult& top_down() const {
        std::call_once(top_down_once_, [&] {
            top_down_.emplace(mine_top_down(net_));
            top_down_bytes_ = to_json(*top_down_).dump();
        });
        return *top_down_;
    }

    const std::string& top_down_bytes() const {
        top_down();
        return top_down_bytes_;
    }

    /// Remembers instances handed out by a selection so explanations can
    /// find them by key later.
    void remember(const std::vector<PatternInstance>& instances) {
        std::lock_guard lock(seen_mutex_);
        for (const auto& i : instances) seen_.emplace(i.key, i);
    }

    std::optional<PatternInstance> find_instance(const std::string& key) const {
        for (const auto& i : top_down().instances)
            if (i.key == key) return i;
        std::lock_guard lock(seen_mutex_);
        auto it = seen_.find(key);
        if (it == seen_.end()) return std::nullopt;
        return it->second;
    }

private:
    struct View {
        std::once_flag once;
        std::optional<MarkGeometry> geometry;
        std::string bytes;
        std::unique_ptr<SelectionResolver> resolver;
    };

    std::string id_;
    Network net_;
    mutable std::once_flag ordering_once_, coords_once_, top_down_once_;
    mutable std::optional<NodeOrdering> ordering_;
    mutable std::optional<NodeCoordinates> coords_;
    mutable std::array<View, 3> views_;
    mutable std::optional<MiningResult> top_down_;
    mutable std::string top_down_bytes_;
    mutable std::mutex seen_mutex_;
    std::map<std::string, PatternInstance> seen_;
};

/// Uploaded networks by id. Ids are "net-1", "net-2", ... in upload order, so
/// replaying the same uploads against a fresh store gives the same ids.
class SessionStore {
public:
    std::shared_ptr<NetworkEntry> add(Network net) {
        std::unique_lock lock(mutex_);
        std::string id;
        do id = "net-" + std::to_string(++last_);
        while (entries_.count(id));
        auto entry = std::make_shared<NetworkEntry>(id, std::move(net));
        entries_.emplace(id, entry);
        return entry;
    }

    /// Stores under a caller-chosen id (preloaded files). Throws if taken.
    std::shared_ptr<NetworkEntry> add(const std::string& id, Network net) {
        std::unique_lock lock(mutex_);
        auto entry = std::make_shared<NetworkEntry>(id, std::move(net));
        if (!entries_.emplace(id, entry).second) throw std::invalid_argument("network id '" + id + "' already in use");
        return entry;
    }

    std::shared_ptr<NetworkEntry> find(const std::string& id) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(id);
        return it == entries_.end() ? nullptr : it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<NetworkEntry>> entries_;
    std::uint64_t last_ = 0;
};

}  // namespace patex

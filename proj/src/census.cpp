#include "soltes/census.hpp"

#include <algorithm>
#include <atomic>
#include <istream>

#include <json.hpp>

#include "detail.hpp"
#include "soltes/codec.hpp"
#include "soltes/metrics.hpp"

namespace soltes {

namespace {

using detail::BfsScratch;

// Per-vertex parallelism takes over for single large graphs.
constexpr Vertex kLargeGraphOrder = 512;

struct PendingRecord {
    std::int64_t index;
    Graph graph;
};

Vertex diameter_of(const Graph& g) {
    BfsScratch scratch(g.vertex_count());
    Vertex diam = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto r = scratch.run(g, v, -1);
        scratch.reset();
        diam = std::max(diam, r.eccentricity);
    }
    return diam;
}

ScanRecord make_record(std::int64_t index, const Graph& g, const VertexClassification& c,
                       bool keep_deltas) {
    ScanRecord rec;
    rec.index = index;
    rec.n = c.n;
    rec.m = c.m;
    rec.soltes_count = c.soltes_count;
    rec.z = c.common_delta();
    rec.negative_soltes = c.negative_soltes();
    rec.soltes_graph = c.all_soltes();
    if (keep_deltas) {
        rec.deltas.reserve(c.vertices.size());
        for (const auto& v : c.vertices) rec.deltas.push_back(v.delta);
    }
    return rec;
}

// Prefilter outcome: empty = classify, otherwise the rejection reason.
std::string prefilter_reason(const Graph& g, const ScanFilter& filter) {
    if (!is_connected(g)) return "disconnected";
    if (filter.min_degree_at_least && g.min_degree() < *filter.min_degree_at_least)
        return "min-degree";
    if (filter.require_diameter_at_least && diameter_of(g) < *filter.require_diameter_at_least)
        return "diameter";
    return {};
}

}  // namespace

void ScanFilter::validate() const {
    if (!min_degree_at_least && !require_diameter_at_least && !classify_fully)
        fail(Errc::bad_parameter, "scan filter has no active criterion");
}

bool vt_diameter_prefilter(Vertex n, int d) {
    const std::int64_t connectivity = (2LL * (d + 1) + 2) / 3;  // ceil(2(d+1)/3)
    return n < 2LL * (d + 1) + connectivity;
}

bool negative_soltes_check(const Graph& g) {
    if (!is_connected(g)) fail(Errc::disconnected_graph, "negative-Soltes check needs a connected graph");
    const Vertex n = g.vertex_count();
    if (n == 0) fail(Errc::disconnected_graph, "empty graph");
    BfsScratch scratch(n);
    std::int64_t doubled = 0;
    for (Vertex v = 0; v < n; ++v) {
        doubled += scratch.run(g, v, -1).sigma;
        scratch.reset();
    }
    const std::int64_t w = doubled / 2;
    for (Vertex v = 0; v < n; ++v) {
        auto z = detail::scalar_delta(g, v, w, scratch);
        if (!z || *z > 0) return false;
    }
    return true;
}

ScanReport scan(std::istream& source, const ScanFilter& filter, int workers, ScanFormat format) {
    filter.validate();
    const int pool = detail::resolve_workers(workers);

    ScanReport report;
    std::int64_t index = 0;

    // Record reader; returns false at end of stream. Decode failures are
    // logged against the record index and skipped.
    auto next_record = [&](PendingRecord& out) -> bool {
        while (true) {
            if (format == ScanFormat::graph6) {
                std::string line;
                do {
                    if (!std::getline(source, line)) return false;
                } while (line.find_first_not_of(" \t\r\n") == std::string::npos);
                std::int64_t my_index = index++;
                ++report.total;
                try {
                    out = {my_index, decode_graph6(line)};
                    return true;
                } catch (const Error&) {
                    ++report.prefiltered["decode-error"];
                    report.decode_error_indices.push_back(my_index);
                }
            } else {
                source >> std::ws;
                while (source.good() && source.peek() == '#') {
                    std::string comment;
                    std::getline(source, comment);
                    source >> std::ws;
                }
                if (!source.good() || source.eof()) return false;
                std::int64_t my_index = index++;
                ++report.total;
                try {
                    out = {my_index, read_edge_list(source)};
                    return true;
                } catch (const Error&) {
                    ++report.prefiltered["decode-error"];
                    report.decode_error_indices.push_back(my_index);
                }
            }
        }
    };

    const std::size_t batch_size = std::max<std::size_t>(64, static_cast<std::size_t>(8) * pool);
    std::vector<PendingRecord> small_batch, large_batch;
    std::mutex mu;

    auto flush = [&] {
        // Small graphs fan out one-per-worker; large graphs run one at a
        // time with per-vertex parallelism inside classify_vertices.
        std::vector<ScanRecord> results;
        std::atomic<std::size_t> cursor{0};
        detail::parallel_run(pool, [&](int) {
            for (std::size_t i; (i = cursor.fetch_add(1)) < small_batch.size();) {
                const auto& rec = small_batch[i];
                std::string reason = prefilter_reason(rec.graph, filter);
                if (!reason.empty()) {
                    std::lock_guard<std::mutex> lock(mu);
                    ++report.prefiltered[reason];
                } else {
                    auto c = classify_vertices(rec.graph, {.workers = 1, .verify = false});
                    auto row = make_record(rec.index, rec.graph, c, filter.classify_fully);
                    std::lock_guard<std::mutex> lock(mu);
                    results.push_back(std::move(row));
                }
            }
        });
        for (const auto& rec : large_batch) {
            std::string reason = prefilter_reason(rec.graph, filter);
            if (!reason.empty()) {
                ++report.prefiltered[reason];
            } else {
                auto c = classify_vertices(rec.graph, {.workers = pool, .verify = false});
                results.push_back(make_record(rec.index, rec.graph, c, filter.classify_fully));
            }
        }
        std::sort(results.begin(), results.end(),
                  [](const ScanRecord& a, const ScanRecord& b) { return a.index < b.index; });
        report.classified.insert(report.classified.end(), std::make_move_iterator(results.begin()),
                                 std::make_move_iterator(results.end()));
        small_batch.clear();
        large_batch.clear();
    };

    PendingRecord rec;
    while (next_record(rec)) {
        (rec.graph.vertex_count() >= kLargeGraphOrder ? large_batch : small_batch)
            .push_back(std::move(rec));
        if (small_batch.size() + large_batch.size() >= batch_size) flush();
    }
    flush();

    if (report.total == 0) fail(Errc::empty_stream, "no records in input");
    return report;
}

std::string scan_report_to_json(const ScanReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["total"] = report.total;
    auto& pre = j["prefiltered"] = nlohmann::ordered_json::object();
    for (const auto& [reason, count] : report.prefiltered) pre[reason] = count;
    auto& classified = j["classified"] = nlohmann::ordered_json::array();
    for (const auto& rec : report.classified) {
        nlohmann::ordered_json r;
        r["index"] = rec.index;
        r["n"] = rec.n;
        r["m"] = rec.m;
        r["soltes_count"] = rec.soltes_count;
        if (rec.z) r["z"] = *rec.z;
        else r["z"] = "non-constant";
        r["negative_soltes"] = rec.negative_soltes;
        r["soltes_graph"] = rec.soltes_graph;
        if (!rec.deltas.empty()) {
            auto& ds = r["delta_w"] = nlohmann::ordered_json::array();
            for (const auto& d : rec.deltas) {
                if (d) ds.push_back(*d);
                else ds.push_back("cut");
            }
        }
        classified.push_back(std::move(r));
    }
    auto& errs = j["decode_error_indices"] = nlohmann::ordered_json::array();
    for (auto i : report.decode_error_indices) errs.push_back(i);
    return j.dump();
}

}  // namespace soltes

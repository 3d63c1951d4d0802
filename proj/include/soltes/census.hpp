#ifndef SOLTES_CENSUS_HPP
#define SOLTES_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

struct ScanFilter {
    std::optional<int> min_degree_at_least;
    std::optional<int> require_diameter_at_least;
    bool classify_fully = true;  // keep per-vertex deltas in the records

    void validate() const;  // at least one criterion must be active
};

struct ScanRecord {
    std::int64_t index = 0;  // position in the input stream
    Vertex n = 0;
    std::int64_t m = 0;
    Vertex soltes_count = 0;
    std::optional<std::int64_t> z;  // common delta when constant over all vertices
    bool negative_soltes = false;   // W(G) <= W(G\v) for all v, all deletions connected
    bool soltes_graph = false;      // delta_w = 0 for all v
    // per-vertex deltas (empty entry = cut vertex); filled when classify_fully
    std::vector<std::optional<std::int64_t>> deltas;
};

struct ScanReport {
    std::int64_t total = 0;                            // records read, decodable or not
    std::map<std::string, std::int64_t> prefiltered;   // rejection reason -> count
    std::vector<ScanRecord> classified;                // ordered by input index
    std::vector<std::int64_t> decode_error_indices;

    bool clean() const { return decode_error_indices.empty(); }
};

enum class ScanFormat { graph6, edgelist };

// Streams records, applies prefilters (decode / connectivity / degree /
// diameter), classifies the rest. Output is identical for any worker count.
ScanReport scan(std::istream& source, const ScanFilter& filter, int workers,
                ScanFormat format = ScanFormat::graph6);

// Every deletion stays connected and never decreases the total distance.
bool negative_soltes_check(const Graph& g);

// For a d-regular vertex-transitive graph (trusted metadata): true when the
// order forces diameter <= 3, via connectivity >= ceil(2(d+1)/3) and
// n >= sum of the first four layer sizes.
bool vt_diameter_prefilter(Vertex n, int d);

std::string scan_report_to_json(const ScanReport& report);

}  // namespace soltes

#endif  // SOLTES_CENSUS_HPP

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uoms::detectors {

enum class family { lof, knn, ocsvm, cof, abod, iforest, hbos, loda };

const char* family_name(family f);
family family_from_name(const std::string& name); // throws ConfigError

struct hyperparameter {
    std::string name;
    std::string value; // canonical grid spelling, e.g. "10" or "0.1" or "euclidean"

    double as_number() const;
};

// One {detector, hyperparameter-configuration} pair. (family, hp1, hp2) is
// unique within a pool; ids are "family|hp1=v|hp2=v".
struct model_spec {
    family algo = family::knn;
    hyperparameter hp1;
    std::optional<hyperparameter> hp2;
    std::uint64_t seed = 0;

    std::string id() const;
    // OCSVM slots exist so externally trained scores can be imported; the
    // native zoo never trains them.
    bool imported() const { return algo == family::ocsvm; }
};

model_spec parse_model_id(const std::string& id); // throws FormatError
std::string family_of_model_id(const std::string& id);

struct pool_config {
    // Table-layout default: all eight families. Unknown names are a
    // ConfigError; an empty list yields an empty pool.
    std::vector<std::string> families = {"lof",  "knn",     "ocsvm", "cof",
                                         "abod", "iforest", "hbos",  "loda"};
    double minkowski_p = 2.0; // exposed override; the gridded value duplicates euclidean
    std::uint64_t pool_seed = 0;
};

// Cross product of the per-family grids, in deterministic order. The full
// default pool has 297 slots (261 native + 36 imported OCSVM).
std::vector<model_spec> enumerate_model_pool(const pool_config& config);

// Model slots in the pool whose per-family grid sizes match the default
// layout; used to weight family-mean fixtures into the Random baseline.
std::size_t default_family_pool_size(family f);

} // namespace uoms::detectors

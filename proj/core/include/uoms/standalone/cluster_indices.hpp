#pragma once

#include <span>
#include <string>

namespace uoms::standalone {

// The ten clustering-validity indices applied to the 1-D two-cluster split
// of a score column (top o_t vs rest). Only Silhouette and Xie-Beni are
// pinned by the source method; the remaining definitions follow the
// standard clustering-validity literature:
//   xb  Xie-Beni                     lower-better
//   rs  R-squared (SSB / TSS)        higher-better
//   ch  Calinski-Harabasz            higher-better
//   std mean within-cluster std over overall std, lower-better
//   h   Hubert's gamma (distance vs split-membership correlation), higher
//   s   Silhouette (Rousseeuw)       higher-better
//   i   I-index (k=2, p=2)           higher-better
//   db  Davies-Bouldin               lower-better
//   sd  SD validity (Scat + Dis)     lower-better
//   d   Dunn                         higher-better
enum class cluster_index_kind { xb, rs, ch, stddev, hubert, silhouette, iidx, db, sd, dunn };

cluster_index_kind cluster_index_from_name(const std::string& name); // throws ConfigError
const char* cluster_index_name(cluster_index_kind kind);

enum class orientation { higher_better, lower_better };

orientation cluster_index_orientation(cluster_index_kind kind);

struct index_value {
    double value = 0.0;
    orientation orient = orientation::higher_better;
};

// Scores are min-max normalized internally, which pins the scale-dependent
// indices (i, sd) and leaves the ratio-based ones untouched; every index is
// therefore invariant to strictly increasing affine transforms of the
// column. Zero separation (c_o == c_i) deprioritizes the model: +inf for
// lower-better indices, -inf for higher-better ones.
index_value cluster_index(std::span<const double> scores, std::size_t o_t,
                          cluster_index_kind kind);

} // namespace uoms::standalone

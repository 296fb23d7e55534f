#ifndef BETACYL_JSON_IO_HPP
#define BETACYL_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "betacyl/cantor.hpp"
#include "betacyl/cylinders.hpp"
#include "betacyl/density.hpp"
#include "betacyl/parry_root.hpp"

namespace betacyl {

// Insertion-ordered variant so reports print with stable key order.
using ordered_json = nlohmann::ordered_json;

// Dyadic endpoints travel as exact "m*2^e" strings plus a rounded decimal
// for human eyes; the exact strings are what round-trips.
ordered_json enclosure_to_json(const RealEnclosure& e);
RealEnclosure enclosure_from_json(const ordered_json& j);

ordered_json cylinder_to_json(const ParameterCylinder& c);
ordered_json partition_to_json(const PartitionReport& r);

ordered_json density_to_json(const DensityProfile& d);
// columns: n, tau_n, t_n, d_n_lo, d_n_hi
std::string density_to_csv(const DensityProfile& d);

ordered_json generation_to_json(const GenerationParams& g);
ordered_json local_dimension_to_json(const LocalDimensionReport& r);
ordered_json box_estimate_to_json(const BoxDimensionEstimate& e);
ordered_json ball_report_to_json(const BallCheckReport& r);

} // namespace betacyl

#endif

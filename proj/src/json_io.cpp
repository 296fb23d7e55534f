#include "betacyl/json_io.hpp"

#include <sstream>

#include "betacyl/words.hpp"

namespace betacyl {

ordered_json enclosure_to_json(const RealEnclosure& e) {
    ordered_json j;
    j["lo"] = e.lo.to_string();
    j["hi"] = e.hi.to_string();
    j["p"] = e.p;
    j["lo_decimal"] = e.lo.to_decimal();
    j["hi_decimal"] = e.hi.to_decimal();
    return j;
}

RealEnclosure enclosure_from_json(const ordered_json& j) {
    RealEnclosure e;
    e.lo = Dyadic::parse(j.at("lo").get<std::string>());
    e.hi = Dyadic::parse(j.at("hi").get<std::string>());
    e.p = j.at("p").get<long>();
    return e;
}

ordered_json cylinder_to_json(const ParameterCylinder& c) {
    ordered_json j;
    j["word"] = word_to_string(c.word);
    j["lower_closed"] = c.lower_closed;
    j["lower"] = enclosure_to_json(c.lower);
    j["upper"] = enclosure_to_json(c.upper);
    j["length_lo"] = c.length_lo.to_string();
    j["length_hi"] = c.length_hi.to_string();
    j["length_lo_decimal"] = c.length_lo.to_decimal();
    j["length_hi_decimal"] = c.length_hi.to_decimal();
    return j;
}

ordered_json partition_to_json(const PartitionReport& r) {
    ordered_json rows = ordered_json::array();
    for (const PartitionRow& row : r.rows) {
        ordered_json o;
        o["word"] = word_to_string(row.word);
        o["lower"] = enclosure_to_json(row.lower);
        o["upper"] = enclosure_to_json(row.upper);
        o["has_next"] = row.has_next;
        o["gap_bound"] = row.gap_bound.to_string();
        o["adjacent_ok"] = row.adjacent_ok;
        rows.push_back(std::move(o));
    }
    ordered_json j;
    j["cylinders"] = r.rows.size();
    j["violations"] = r.violations;
    j["ok"] = r.ok();
    j["rows"] = std::move(rows);
    return j;
}

ordered_json density_to_json(const DensityProfile& d) {
    ordered_json rows = ordered_json::array();
    for (const DensityRow& row : d.rows) {
        ordered_json o;
        o["n"] = row.n;
        o["tau_n"] = row.tau;
        o["t_n"] = row.t;
        o["degenerate"] = row.degenerate;
        o["d_n_lo"] = row.d_lo.to_string();
        o["d_n_hi"] = row.d_hi.to_string();
        o["d_n_lo_decimal"] = row.d_lo.to_decimal();
        o["d_n_hi_decimal"] = row.d_hi.to_decimal();
        rows.push_back(std::move(o));
    }
    ordered_json j;
    j["precision"] = d.precision;
    j["window_lo"] = d.window_lo;
    j["window_hi"] = d.window_hi;
    j["liminf_lo"] = d.liminf_lo.to_decimal();
    j["liminf_hi"] = d.liminf_hi.to_decimal();
    j["limsup_lo"] = d.limsup_lo.to_decimal();
    j["limsup_hi"] = d.limsup_hi.to_decimal();
    j["rows"] = std::move(rows);
    return j;
}

std::string density_to_csv(const DensityProfile& d) {
    std::ostringstream out;
    out << "n,tau_n,t_n,d_n_lo,d_n_hi\n";
    for (const DensityRow& row : d.rows) {
        out << row.n << ',' << row.tau << ',' << row.t << ','
            << row.d_lo.to_decimal() << ',' << row.d_hi.to_decimal() << '\n';
    }
    return out.str();
}

ordered_json generation_to_json(const GenerationParams& g) {
    ordered_json j;
    j["k"] = g.k;
    j["n"] = g.n;
    j["a"] = g.a;
    j["b"] = g.b;
    j["c"] = g.c;
    j["m"] = g.m;
    return j;
}

ordered_json local_dimension_to_json(const LocalDimensionReport& r) {
    ordered_json rows = ordered_json::array();
    for (const LocalDimensionRow& row : r.rows) {
        ordered_json o;
        o["n"] = row.n;
        o["r_lo"] = row.r_lo.to_string();
        o["r_hi"] = row.r_hi.to_string();
        o["r_lo_decimal"] = row.r_lo.to_decimal();
        o["r_hi_decimal"] = row.r_hi.to_decimal();
        rows.push_back(std::move(o));
    }
    ordered_json j;
    j["bound_lo"] = r.bound_lo.to_decimal();
    j["bound_hi"] = r.bound_hi.to_decimal();
    j["rows"] = std::move(rows);
    return j;
}

ordered_json box_estimate_to_json(const BoxDimensionEstimate& e) {
    ordered_json j;
    j["lo"] = e.lo.to_string();
    j["hi"] = e.hi.to_string();
    j["lo_decimal"] = e.lo.to_decimal();
    j["hi_decimal"] = e.hi.to_decimal();
    j["free_exponent"] = e.free_exponent;
    j["depth"] = e.depth;
    return j;
}

ordered_json ball_report_to_json(const BallCheckReport& r) {
    ordered_json rows = ordered_json::array();
    for (const BallCheckRow& row : r.rows) {
        ordered_json o;
        o["n"] = row.n;
        o["count"] = row.count.get_str();
        o["bound"] = row.bound.get_str();
        o["ok"] = row.ok;
        rows.push_back(std::move(o));
    }
    ordered_json j;
    j["samples"] = r.samples;
    j["violations"] = r.violations;
    j["rows"] = std::move(rows);
    return j;
}

} // namespace betacyl

#include "leofusion/orbital.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leofusion {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double d) { return d * kPi / 180.0; }

struct Vec3 {
  double x, y, z;
};

Vec3 to_ecef(const GeoPoint& p, double earth_radius_m) {
  const double r = earth_radius_m + p.altitude_m;
  const double lat = deg2rad(p.latitude_deg);
  const double lon = deg2rad(p.longitude_deg);
  return Vec3{r * std::cos(lat) * std::cos(lon),
              r * std::cos(lat) * std::sin(lon), r * std::sin(lat)};
}

double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double wrap_lon(double lon_deg) {
  double lon = std::fmod(lon_deg + 180.0, 360.0);
  if (lon < 0) lon += 360.0;
  return lon - 180.0;
}

}  // namespace

void ConstellationSpec::validate() const {
  if (num_orbits < 1) throw std::invalid_argument("num_orbits must be >= 1");
  if (sats_per_orbit < 1)
    throw std::invalid_argument("sats_per_orbit must be >= 1");
  if (altitude_m <= 0) throw std::invalid_argument("altitude_m must be > 0");
  if (polar_mask_deg < 0 || polar_mask_deg > 90)
    throw std::invalid_argument("polar_mask_deg must be in [0, 90]");
  for (double v : {earth_radius_m, earth_mass_kg, grav_const, kepler_const,
                   earth_rotation_rad_s, light_speed_m_s, source_max_range_m}) {
    if (v <= 0) throw std::invalid_argument("physical constants must be > 0");
  }
}

void ZoneGrid::validate() const {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("zone grid needs rows >= 1 and cols >= 1");
  if (cols % 2 != 0)
    throw std::invalid_argument("zone grid needs an even column count");
}

GeoPoint ZoneGrid::center(ZoneId z) const {
  return GeoPoint{-90.0 + (z.row + 0.5) * cell_lat_deg(),
                  -180.0 + (z.col + 0.5) * cell_lon_deg(), 0.0};
}

std::vector<ZoneId> ZoneGrid::zones() const {
  std::vector<ZoneId> out;
  out.reserve(static_cast<std::size_t>(zone_count()));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.push_back(ZoneId{r, c});
  return out;
}

const GeoPoint& Snapshot::sat_position_of(ZoneId z) const {
  auto it = vn_to_sat.find(z);
  if (it == vn_to_sat.end())
    throw std::invalid_argument("zone has no associated satellite");
  auto pit = sat_positions.find(it->second);
  if (pit == sat_positions.end())
    throw std::invalid_argument("satellite position missing from snapshot");
  return pit->second;
}

double orbital_period(const ConstellationSpec& spec) {
  const double r = spec.earth_radius_m + spec.altitude_m;
  return 2.0 * kPi * std::sqrt(r * r * r / spec.kepler_const);
}

GeoPoint satellite_position(const ConstellationSpec& spec, SatelliteId sat,
                            double t_s) {
  const double period = orbital_period(spec);
  // argument of latitude along the (polar) orbit
  double u = 360.0 * sat.slot / spec.sats_per_orbit + 360.0 * t_s / period;
  u = std::fmod(u, 360.0);
  if (u < 0) u += 360.0;

  // planes spread over 180 degrees; node regresses with Earth rotation
  const double node_lon = 180.0 * sat.plane / spec.num_orbits -
                          spec.earth_rotation_rad_s * t_s * 180.0 / kPi;

  double lat;
  bool ascending_side;
  if (u <= 90.0) {
    lat = u;
    ascending_side = true;
  } else if (u <= 270.0) {
    lat = 180.0 - u;
    ascending_side = false;
  } else {
    lat = u - 360.0;
    ascending_side = true;
  }

  const double lon = wrap_lon(ascending_side ? node_lon : node_lon + 180.0);
  return GeoPoint{lat, lon, spec.altitude_m};
}

ZoneId zone_of(const GeoPoint& point, const ZoneGrid& grid) {
  int row = static_cast<int>(
      std::floor((point.latitude_deg + 90.0) / grid.cell_lat_deg()));
  row = std::max(0, std::min(grid.rows - 1, row));
  int col = static_cast<int>(
      std::floor((point.longitude_deg + 180.0) / grid.cell_lon_deg()));
  col %= grid.cols;
  if (col < 0) col += grid.cols;
  return ZoneId{row, col};
}

std::map<ZoneId, SatelliteId> vn_association(const ConstellationSpec& spec,
                                             const ZoneGrid& grid, double t_s) {
  std::map<ZoneId, SatelliteId> assoc;

  std::vector<Vec3> sat_dirs;
  std::vector<SatelliteId> sat_ids;
  sat_dirs.reserve(
      static_cast<std::size_t>(spec.num_orbits * spec.sats_per_orbit));
  for (int p = 0; p < spec.num_orbits; ++p) {
    for (int s = 0; s < spec.sats_per_orbit; ++s) {
      const SatelliteId id{p, s};
      const GeoPoint pos = satellite_position(spec, id, t_s);
      Vec3 v = to_ecef(pos, spec.earth_radius_m);
      const double n = norm(v);
      sat_dirs.push_back(Vec3{v.x / n, v.y / n, v.z / n});
      sat_ids.push_back(id);
    }
  }

  for (ZoneId z : grid.zones()) {
    Vec3 c = to_ecef(grid.center(z), spec.earth_radius_m);
    const double n = norm(c);
    c = Vec3{c.x / n, c.y / n, c.z / n};
    // maximize cos(central angle); first (lowest plane, slot) wins ties
    double best = -2.0;
    SatelliteId best_id{};
    for (std::size_t i = 0; i < sat_dirs.size(); ++i) {
      const double cosang = dot(c, sat_dirs[i]);
      if (cosang > best) {
        best = cosang;
        best_id = sat_ids[i];
      }
    }
    assoc.emplace(z, best_id);
  }
  return assoc;
}

std::set<ZonePair> intra_plane_edges(const ZoneGrid& grid) {
  std::set<ZonePair> edges;
  // north-south neighbors within a column
  for (int c = 0; c < grid.cols; ++c)
    for (int r = 0; r + 1 < grid.rows; ++r)
      edges.insert(ZonePair(ZoneId{r, c}, ZoneId{r + 1, c}));
  // ring closures over the poles to the antipodal column
  const int half = grid.cols / 2;
  for (int c = 0; c < half; ++c) {
    edges.insert(ZonePair(ZoneId{grid.rows - 1, c}, ZoneId{grid.rows - 1, c + half}));
    edges.insert(ZonePair(ZoneId{0, c}, ZoneId{0, c + half}));
  }
  return edges;
}

std::set<ZonePair> inter_plane_edges(const ZoneGrid& grid) {
  std::set<ZonePair> edges;
  for (int r = 0; r < grid.rows; ++r)
    for (int c = 0; c < grid.cols; ++c)
      edges.insert(ZonePair(ZoneId{r, c}, ZoneId{r, (c + 1) % grid.cols}));
  return edges;
}

std::set<ZonePair> seam_edges(const ZoneGrid& grid) {
  // Rings c and c + cols/2 belong to one plane; the first and last plane
  // meet where the column index wraps past a half-turn.
  std::set<ZonePair> edges;
  const int half = grid.cols / 2;
  for (int r = 0; r < grid.rows; ++r) {
    edges.insert(ZonePair(ZoneId{r, half - 1}, ZoneId{r, half}));
    edges.insert(ZonePair(ZoneId{r, grid.cols - 1}, ZoneId{r, 0}));
  }
  return edges;
}

std::set<ZonePair> grid_torus_edges(const ZoneGrid& grid) {
  std::set<ZonePair> edges = intra_plane_edges(grid);
  std::set<ZonePair> inter = inter_plane_edges(grid);
  edges.insert(inter.begin(), inter.end());
  return edges;
}

Snapshot build_snapshot(const ConstellationSpec& spec, const ZoneGrid& grid,
                        double t_s) {
  spec.validate();
  grid.validate();

  Snapshot snap;
  snap.time_s = t_s;
  snap.grid = grid;
  snap.vn_nodes = grid.zones();
  snap.vn_to_sat = vn_association(spec, grid, t_s);

  for (int p = 0; p < spec.num_orbits; ++p)
    for (int s = 0; s < spec.sats_per_orbit; ++s)
      snap.sat_positions.emplace(SatelliteId{p, s},
                                 satellite_position(spec, SatelliteId{p, s}, t_s));

  snap.isl_edges = intra_plane_edges(grid);

  const std::set<ZonePair> seam = seam_edges(grid);
  for (const ZonePair& e : inter_plane_edges(grid)) {
    if (seam.count(e)) continue;
    const double lat_a = snap.sat_position_of(e.a).latitude_deg;
    const double lat_b = snap.sat_position_of(e.b).latitude_deg;
    if (std::abs(lat_a) > spec.polar_mask_deg ||
        std::abs(lat_b) > spec.polar_mask_deg)
      continue;
    snap.isl_edges.insert(e);
  }
  return snap;
}

std::set<ZoneId> visible_nodes(const GeoPoint& point, const Snapshot& snapshot,
                               const ConstellationSpec& spec) {
  std::set<ZoneId> out;
  const bool space_source = point.altitude_m > 0.0;
  for (ZoneId z : snapshot.vn_nodes) {
    const GeoPoint& sat = snapshot.sat_position_of(z);
    if (space_source) {
      if (distance_m(point, sat, spec.earth_radius_m) <= spec.source_max_range_m)
        out.insert(z);
    } else {
      if (elevation_deg(point, sat, spec.earth_radius_m) >=
          spec.elevation_min_deg)
        out.insert(z);
    }
  }
  return out;
}

double distance_m(const GeoPoint& a, const GeoPoint& b, double earth_radius_m) {
  const Vec3 pa = to_ecef(a, earth_radius_m);
  const Vec3 pb = to_ecef(b, earth_radius_m);
  return norm(Vec3{pa.x - pb.x, pa.y - pb.y, pa.z - pb.z});
}

double elevation_deg(const GeoPoint& point, const GeoPoint& sat,
                     double earth_radius_m) {
  const Vec3 p = to_ecef(point, earth_radius_m);
  const Vec3 s = to_ecef(sat, earth_radius_m);
  const Vec3 d{s.x - p.x, s.y - p.y, s.z - p.z};
  const double dn = norm(d);
  if (dn == 0.0) return 90.0;
  const double pn = norm(p);
  const double sin_el = dot(d, Vec3{p.x / pn, p.y / pn, p.z / pn}) / dn;
  return std::asin(std::max(-1.0, std::min(1.0, sin_el))) * 180.0 / kPi;
}

}  // namespace leofusion

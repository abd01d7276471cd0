#ifndef LEOFUSION_ORBITAL_HPP
#define LEOFUSION_ORBITAL_HPP

#include <compare>
#include <map>
#include <set>
#include <vector>

namespace leofusion {

inline constexpr double kDefaultEarthRadiusM = 6371393.0;

// Walker-star constellation geometry plus the visibility knobs that travel
// with it. Defaults follow the standard simulation parameter set.
struct ConstellationSpec {
  int num_orbits = 8;              // N_o
  int sats_per_orbit = 16;         // N_s
  double altitude_m = 500e3;       // h
  double inclination_deg = 90.0;   // i_0, polar
  double earth_radius_m = kDefaultEarthRadiusM;
  double earth_mass_kg = 5.965e24;
  double grav_const = 6.67428e-11;
  double kepler_const = 3.9860e14;           // K, used for all orbital math
  double earth_rotation_rad_s = 7.29211510e-5;
  double polar_mask_deg = 75.0;              // inter-plane ISLs off above this
  double elevation_min_deg = 5.0;            // ground visibility mask
  double source_max_range_m = 2.5e6;         // slant range for space sources
  double light_speed_m_s = 299792458.0;

  void validate() const;  // throws std::invalid_argument
};

struct SatelliteId {
  int plane = 0;  // [0, num_orbits)
  int slot = 0;   // [0, sats_per_orbit)
  auto operator<=>(const SatelliteId&) const = default;
};

struct GeoPoint {
  double latitude_deg = 0.0;   // [-90, 90]
  double longitude_deg = 0.0;  // [-180, 180)
  double altitude_m = 0.0;
};

struct ZoneId {
  int row = 0;
  int col = 0;
  auto operator<=>(const ZoneId&) const = default;
};

// Fixed geographic zone grid. The standard grid is 8 rows x 16 cols of
// 22.5-degree cells (128 zones); smaller grids are used by test instances.
struct ZoneGrid {
  int rows = 8;
  int cols = 16;

  static ZoneGrid standard() { return ZoneGrid{8, 16}; }

  double cell_lat_deg() const { return 180.0 / rows; }
  double cell_lon_deg() const { return 360.0 / cols; }
  int zone_count() const { return rows * cols; }
  int index_of(ZoneId z) const { return z.row * cols + z.col; }
  ZoneId zone_at(int index) const { return ZoneId{index / cols, index % cols}; }
  bool contains(ZoneId z) const {
    return z.row >= 0 && z.row < rows && z.col >= 0 && z.col < cols;
  }
  GeoPoint center(ZoneId z) const;
  std::vector<ZoneId> zones() const;

  void validate() const;  // throws std::invalid_argument
};

// Unordered zone pair, stored with a < b.
struct ZonePair {
  ZoneId a;
  ZoneId b;
  ZonePair() = default;
  ZonePair(ZoneId x, ZoneId y) : a(x < y ? x : y), b(x < y ? y : x) {}
  auto operator<=>(const ZonePair&) const = default;
};

// One static mesh: the VN grid, its live satellite association, and the
// ISL edges in force at time_s.
struct Snapshot {
  double time_s = 0.0;
  ZoneGrid grid;
  std::vector<ZoneId> vn_nodes;
  std::map<ZoneId, SatelliteId> vn_to_sat;
  std::set<ZonePair> isl_edges;
  std::map<SatelliteId, GeoPoint> sat_positions;

  const GeoPoint& sat_position_of(ZoneId z) const;
  bool has_edge(ZoneId x, ZoneId y) const {
    return isl_edges.count(ZonePair(x, y)) > 0;
  }
};

double orbital_period(const ConstellationSpec& spec);

GeoPoint satellite_position(const ConstellationSpec& spec, SatelliteId sat,
                            double t_s);

ZoneId zone_of(const GeoPoint& point, const ZoneGrid& grid);

std::map<ZoneId, SatelliteId> vn_association(const ConstellationSpec& spec,
                                             const ZoneGrid& grid, double t_s);

Snapshot build_snapshot(const ConstellationSpec& spec, const ZoneGrid& grid,
                        double t_s);

// Visible VNs for a task endpoint. Ground points (altitude 0) use the
// elevation mask; space points use the slant-range bound. Both inclusive.
std::set<ZoneId> visible_nodes(const GeoPoint& point, const Snapshot& snapshot,
                               const ConstellationSpec& spec);

// Straight-line (chord) distance between two positions.
double distance_m(const GeoPoint& a, const GeoPoint& b,
                  double earth_radius_m = kDefaultEarthRadiusM);

// Elevation of sat above the local horizon of point, degrees.
double elevation_deg(const GeoPoint& point, const GeoPoint& sat,
                     double earth_radius_m = kDefaultEarthRadiusM);

// Grid mesh helpers. Zones form num_cols/2 polar rings (a ring ascends one
// column and descends the antipodal column); ring-consecutive pairs are the
// intra-plane edges, same-row column neighbors are the inter-plane edges.
std::set<ZonePair> intra_plane_edges(const ZoneGrid& grid);
std::set<ZonePair> inter_plane_edges(const ZoneGrid& grid);
std::set<ZonePair> seam_edges(const ZoneGrid& grid);
std::set<ZonePair> grid_torus_edges(const ZoneGrid& grid);

}  // namespace leofusion

#endif  // LEOFUSION_ORBITAL_HPP

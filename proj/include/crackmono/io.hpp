#pragma once

// Text and image persistence for far field matrices, test matrices,
// indicator grids and eigenvalue reports.
//
// Matrix CSV layout (doubles in shortest round-trip form):
//   [# geometry: <kind> <description>]   test matrices only
//   N,k,weight
//   <N>,<k>,<weight>
//   l,m,re,im
//   <l>,<m>,<re>,<im>                    N*N rows, m varying fastest

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "crackmono/forward_solver.hpp"
#include "crackmono/imaging_scan.hpp"
#include "crackmono/indicator.hpp"
#include "crackmono/test_operators.hpp"

namespace crackmono {

// Raised on file-system failures so callers can map them to an exit code.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_far_field_csv(std::ostream& os, const FarFieldMatrix& F);
FarFieldMatrix read_far_field_csv(std::istream& is);
void save_far_field(const std::filesystem::path& path, const FarFieldMatrix& F);
FarFieldMatrix load_far_field(const std::filesystem::path& path);

void write_test_matrix_csv(std::ostream& os, const TestMatrix& A);
TestMatrix read_test_matrix_csv(std::istream& is);

// i,j,x,y,count rows.
void write_grid_csv(std::ostream& os, const IndicatorGrid& grid);
// Binary P5, min-max normalized to 0..255 with low counts dark. Row 0 is the
// top of the square (j = M), column 0 is i = -M.
void write_grid_pgm(std::ostream& os, const IndicatorGrid& grid);
void save_grid(const std::filesystem::path& csv_path, const std::filesystem::path& pgm_path,
               const IndicatorGrid& grid);

std::string eigen_report_csv_header();
// cx,cy,dx,dy,L,delta,count,ev1..ev5 (smallest five, blank when N < 5).
std::string eigen_report_csv_row(const ProbeSegment& probe, const EigenReport& report);

// 64-bit FNV-1a, hex encoded.
std::string content_hash(const std::string& text);

// Cache file for the forward solve of (arc, k, N, n).
std::filesystem::path far_field_cache_path(const std::filesystem::path& cache_dir, const std::string& arc_name,
                                           const SolverConfig& cfg);

// Loads the cached matrix when present, otherwise solves and stores it.
// An empty cache_dir disables caching.
FarFieldMatrix cached_far_field_matrix(const std::filesystem::path& cache_dir, const ParametricArc& arc,
                                       const SolverConfig& cfg, bool* from_cache = nullptr);

}  // namespace crackmono

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpmc/instance.hpp"
#include "cpmc/mincut.hpp"
#include "cpmc/reductions.hpp"

namespace cpmc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance files carry plain positive integer weights; perturbation is
// applied after loading by whoever needs it.  Writing a graph whose
// weights already carry epsilon terms (or are Infinite) throws
// PreconditionError.  Serialization is canonical: same instance, same
// bytes.
std::string instance_to_json(const PlanarInstance& inst);
PlanarInstance instance_from_json(const std::string& text);
PlanarInstance read_instance(const std::string& path);
void write_instance(const PlanarInstance& inst, const std::string& path);

// A solve outcome as written to disk.  The value is split into an
// integer base and the ranks of its epsilon terms (rank r repeated
// coeff(r) times, ascending); no decimals anywhere.  Certificates are
// named integer lists (component node lists, path nodes); params echo
// solver inputs that a verifier needs (the lcsp query, for one).
struct ResultDoc {
  std::string solver;
  CutKind kind = CutKind::Edge;
  std::vector<int> elements;
  std::int64_t base = 0;
  std::vector<int> eps_ranks;
  std::map<std::string, std::vector<int>> certificates;
  std::map<std::string, std::string> params;
  std::int64_t wall_ms = 0;
};

// base + eps ranks <-> PerturbedWeight.  set_result_value rejects
// Infinite values and negative epsilon coefficients (cut totals are sums
// of element weights, so neither occurs in a legitimate result).
PerturbedWeight result_value(const ResultDoc& doc);
void set_result_value(ResultDoc& doc, const PerturbedWeight& w);

std::string result_to_json(const ResultDoc& doc);
ResultDoc result_from_json(const std::string& text);
ResultDoc read_result(const std::string& path);
void write_result(const ResultDoc& doc, const std::string& path);

// {"n": ..., "sets": [{"ids": [...], "weight": ...}, ...]}
std::string set_cover_to_json(const SetCoverInstance& sc);
SetCoverInstance set_cover_from_json(const std::string& text);
SetCoverInstance read_set_cover(const std::string& path);
void write_set_cover(const SetCoverInstance& sc, const std::string& path);

// DIMACS edge format, import only: "c" comments, one "p edge N M"
// header, then M lines "e U V [W]" with 1-based endpoints.  Unit edge
// weight when W is absent.
Graph import_dimacs(std::istream& in);
Graph import_dimacs_file(const std::string& path);

// Graphviz source for an instance; highlight marks edge ids (kind Edge)
// or node ids (kind Node), which is how cuts and paths get drawn.
std::string to_dot(const PlanarInstance& inst, CutKind kind = CutKind::Edge,
                   const std::vector<int>& highlight = {});

}  // namespace cpmc

// Copyright 2026 The artin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/gorenstein.hpp"
#include "artin/ideal.hpp"
#include "artin/random.hpp"

namespace artin {

// Point of P^2 (or P^n), normalized so the last nonzero coordinate is 1.
struct ProjPoint {
  Vector coords;

  static ProjPoint normalized(const Field& field, Vector coords);
  std::string to_string(const Field& field) const;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const;
};

// The q^2 + q + 1 points of P^2 over a finite field: (a:b:1), (a:1:0), (1:0:0).
std::vector<ProjPoint> enumerate_p2(const Field& field);

// Largest field order the point scans accept.
inline constexpr std::uint64_t kMaxScanOrder = std::uint64_t{1} << 20;

struct BasePoint {
  ProjPoint point;
  std::size_t multiplicity = 1;
  int field_degree = 1;  // smallest k with the point defined over GF(p^k)
};

struct BaseLocusReport {
  Field field;  // field the points live in
  std::vector<BasePoint> points;
  std::size_t total_length = 0;
  bool reduced = false;
  int splitting_degree = 1;
};

// Length of the local ring of V(gens) at a point, via dim K[u,v]/(I + m^N)
// in an affine chart, for N until two consecutive values agree.
std::size_t local_length(const std::vector<Polynomial>& gens, const ProjPoint& point,
                         int max_order = 16);

// Common zeros of two forms over GF(q^k), k = 1..split_bound, with
// multiplicities. Throws NotZeroDimensional on a shared factor and
// NotSplit when the lengths do not add up to deg g1 * deg g2.
BaseLocusReport base_locus(const Polynomial& g1, const Polynomial& g2, int split_bound = 4);

struct HesseReport {
  bool is_hesse = false;
  // Lines with three of the points, as index triples.
  std::vector<std::array<int, 3>> lines;
  std::vector<int> lines_per_point;
  // Pairs whose joining line has no third point.
  std::size_t bad_pairs = 0;
};

HesseReport is_hesse_configuration(const std::vector<ProjPoint>& points, const Field& field);
HesseReport is_hesse_configuration(const BaseLocusReport& report);

// (a, b, c) with span(g1, g2) = span(a x^3 + b y^3 + c z^3, xyz).
std::array<FieldElement, 3> hesse_pencil_normal_form(const Polynomial& g1, const Polynomial& g2);

struct FiberReport {
  std::size_t generic_fiber_size = 0;
  std::size_t image_degree = 0;
  bool base_point_free = true;
  // fiber size -> number of sampled points with that fiber size
  std::map<std::size_t, std::size_t> fiber_table;
  std::size_t samples = 0;
};

// Fibers of [f1 : f2 : f3 : f4] on P^2(GF(q)), measured by an exhaustive scan.
FiberReport morphism_fibers(const std::vector<Polynomial>& cubics, int samples,
                            std::uint64_t seed);

struct FiberDecomposition {
  std::array<std::vector<ProjPoint>, 3> sigmas;
  std::array<ProjPoint, 3> images;
  bool collinearity = false;
  // rank of the 4 x 3 evaluation matrix of W on each sigma
  std::array<std::size_t, 3> conditions{};
  int attempts = 0;
};

// Splits the preimage of a random line in P^3 for a 3-to-1 morphism.
FiberDecomposition fiber_decomposition(const std::vector<Polynomial>& cubics, std::uint64_t seed,
                                       int retry_budget = 50);

// Ideal of a reduced set of points, exact through degree npoints + 1.
GradedIdeal points_ideal(const std::vector<ProjPoint>& points, const Field& field);

// True if some 6 of the points lie on a conic.
bool has_six_on_conic(const std::vector<ProjPoint>& points, const Field& field);

struct HbReport {
  std::size_t length = 0;
  std::vector<Polynomial> cubics;
  // Linear column of the Hilbert-Burch matrix.
  std::vector<Polynomial> linear_column;
  std::size_t linear_part_rank = 0;
  bool independent = false;
  std::optional<Polynomial> nonzerodivisor;
  std::optional<GradedIdeal> completion;
};

// Hilbert-Burch data of a length-7 scheme with h-vector (1,2,3,1) and the
// Gorenstein completion J + (g), J = I_X + (f) for a random cubic f.
HbReport hb_analysis(const GradedIdeal& ideal_x, std::uint64_t seed);

struct LinkageReport {
  SkewPolyMatrix reduced;
  GradedIdeal ideal_x;
  GradedIdeal ideal_y;
  GradedIdeal complete_intersection;
  std::size_t degree_x = 0;
  std::size_t degree_y = 0;
  std::array<int, 2> ci_type{};
  std::size_t ci_degree = 0;
  bool product_in_ci = false;
};

// Reduces a 5x5 Buchsbaum-Eisenbud pattern matrix to q1 = 0, l4 = 0 and links the length-7
// scheme X to the scheme Y of the 2x3 minors through a (3,5) complete
// intersection. Throws StructureMismatch when the reduction is not reached.
LinkageReport linkage_check(const SkewPolyMatrix& matrix, std::uint64_t seed);

}  // namespace artin

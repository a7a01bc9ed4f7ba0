#pragma once

#include "ladder/structure/structure.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ladder::reps {

using exact::Matrix;
using exact::Rat;
using structure::OpSet;
using structure::StructureReport;
using systems::SystemId;
using systems::SystemModel;

struct InadmissibleOffsets : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Parameter choices for which the construction is not irreducible: a pole on
// the grid, a ladder coefficient vanishing inside it, or a repeated eigenvalue.
struct DegenerateParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Caged: a1, a2, mu.  TTW: a, b, omega.
using RepParams = std::map<std::string, Rat>;

// Finite-dimensional irreducible representation on the delta basis
// e_{x_N}, x_N = top - (N1 - N) * step, N = N0..N1 (N0 = 0, N1 = M).
struct Representation {
  SystemId id = SystemId::CagedOscillator;
  int p = 1, q = 1;
  RepParams params;
  int p0 = 0, q0 = 0, N0 = 0, N1 = 0;
  Rat offset;                // x_N = offset + N * step
  Rat u;                     // energy-carrying parameter fixed by the lower boundary
  std::vector<Rat> grid;     // x_N
  std::vector<Rat> spectrum; // eigenvalues of the separation operator
  std::string separation;    // "L1" or "L2"
  Rat energy;                // model energy at these parameters
  Rat energy_displayed;      // closed form as displayed
  Rat energy_derived;        // closed form from the energy map, any k
  std::vector<Rat> spectrum_displayed;
  bool raise_kills_top = false;   // raise coefficient vanishes at the top grid point
  bool lower_kills_bottom = false;
  OpSet<Matrix> ops;              // every operator of the structure report, as matrices
  std::vector<std::string> notes;

  std::size_t dimension() const { return grid.size(); }
};

// Ladder operators, symmetrized pair and P operators of the model at (p, q),
// without evaluating any structure equation.
OpSet<shift::ShiftOp> model_operators(const SystemModel& model);

Representation build_rep(const SystemModel& model, const OpSet<shift::ShiftOp>& ops, const RepParams& params, int p0,
                         int q0, int M);
Representation build_rep(const SystemModel& model, const RepParams& params, int p0, int q0, int M);

// Matrix of a difference operator on the representation grid. Terms leaving
// the grid are dropped; they vanish for operators generated by the ladders.
Matrix to_matrix(const Representation& rep, const shift::ShiftOp& op);

struct RepCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RepStatus {
  std::vector<RepCheck> checks;
  bool passed() const;
};

// Spectrum and energy against the closed forms, boundary annihilation as
// matrix statements, and every verified equation of the report as an exact
// matrix identity.
RepStatus check_rep(const Representation& rep, const StructureReport& report);

// Random rational parameters with fixed-size numerators and denominators.
RepParams random_params(SystemId id, std::mt19937_64& rng);

nlohmann::ordered_json to_json(const Representation& rep, bool include_matrices = false);
nlohmann::ordered_json to_json(const RepStatus& status);
std::string spectrum_csv(const Representation& rep);  // header "N,x,eigenvalue"

}  // namespace ladder::reps

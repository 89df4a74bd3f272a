#pragma once

#include <random>

#include "scflab/catalog.hpp"

namespace scf {

using Rng = std::mt19937_64;

Vector random_vector(int n, Rng& rng, double scale = 1.0);
OneForm random_one_form(int n, Rng& rng);
TwoForm random_two_form(int n, Rng& rng);
/// Random symmetric positive definite matrix with eigenvalues in [0.5, 2.5].
Matrix random_spd(int n, Rng& rng);

/// The same algebra in a random well-conditioned basis (still nilpotent
/// when L is).
LieAlgebra random_basis_change(const LieAlgebra& L, Rng& rng);

/// (omega, S J S^-1) for a random S preserving omega; stays almost Kahler.
AlmostKahlerStructure random_symplectic_conjugate(const AlmostKahlerStructure& S, Rng& rng,
                                                  double scale = 0.4);

/// Random member of the catalog family `name` (random positive parameters),
/// followed by a random symplectic conjugation.
AlmostKahlerStructure random_catalog_structure(const std::string& name, Rng& rng);

/// Random point of the four-dimensional n4 family with b' bounded away from 0
/// and a positive definite metric.
N4FamilyParams random_n4_params(Rng& rng);

}  // namespace scf

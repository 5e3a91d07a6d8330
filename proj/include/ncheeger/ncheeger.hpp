#pragma once

// Umbrella header: exact Cheeger constants for Neumann problems on weighted
// graphs, reflected-walk modified graphs, Laplacian spectra, and mechanical
// verification of the inequalities relating them.

#include "ncheeger/cheeger.hpp"
#include "ncheeger/cli.hpp"
#include "ncheeger/domain.hpp"
#include "ncheeger/eigensolve.hpp"
#include "ncheeger/errors.hpp"
#include "ncheeger/graph.hpp"
#include "ncheeger/io.hpp"
#include "ncheeger/partition.hpp"
#include "ncheeger/rational.hpp"
#include "ncheeger/reflection.hpp"
#include "ncheeger/spectra.hpp"
#include "ncheeger/verify.hpp"

#pragma once

// Umbrella header for the whole library.

#include "projmotif/alphabet.hpp"
#include "projmotif/driver.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/fasta.hpp"
#include "projmotif/kmer.hpp"
#include "projmotif/oracle.hpp"
#include "projmotif/parallel.hpp"
#include "projmotif/planted.hpp"
#include "projmotif/projection.hpp"
#include "projmotif/refine.hpp"
#include "projmotif/report.hpp"
#include "projmotif/rng.hpp"
#include "projmotif/scoring.hpp"
#include "projmotif/sequence.hpp"

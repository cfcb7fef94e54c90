// Umbrella header.

#ifndef KAHLEROBS_KAHLEROBS_HPP_
#define KAHLEROBS_KAHLEROBS_HPP_

#include "kahlerobs/analysis.hpp"
#include "kahlerobs/dehn.hpp"
#include "kahlerobs/errors.hpp"
#include "kahlerobs/extensions.hpp"
#include "kahlerobs/group_hom.hpp"
#include "kahlerobs/homology.hpp"
#include "kahlerobs/intlinalg.hpp"
#include "kahlerobs/lieranks.hpp"
#include "kahlerobs/magnus.hpp"
#include "kahlerobs/parser.hpp"
#include "kahlerobs/presentation.hpp"
#include "kahlerobs/quotient_algebra.hpp"
#include "kahlerobs/report.hpp"
#include "kahlerobs/sparse.hpp"
#include "kahlerobs/surface.hpp"
#include "kahlerobs/verify.hpp"
#include "kahlerobs/word.hpp"

#endif  // KAHLEROBS_KAHLEROBS_HPP_

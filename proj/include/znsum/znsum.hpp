#pragma once

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"
#include "znsum/count_vector.hpp"
#include "znsum/sumset.hpp"
#include "znsum/reps.hpp"
#include "znsum/expsum.hpp"
#include "znsum/density.hpp"
#include "znsum/sampling.hpp"
#include "znsum/report.hpp"
#include "znsum/verify.hpp"

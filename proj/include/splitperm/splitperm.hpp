#ifndef SPLITPERM_SPLITPERM_HPP
#define SPLITPERM_SPLITPERM_HPP

#include "splitperm/enumerate.hpp"
#include "splitperm/envelope.hpp"
#include "splitperm/error.hpp"
#include "splitperm/io.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/oracle.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/splitters.hpp"
#include "splitperm/splitting.hpp"
#include "splitperm/theorem.hpp"
#include "splitperm/witness.hpp"

#endif

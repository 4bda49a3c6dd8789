#pragma once

// Umbrella header: set partitions in canonical form, the slash and split
// products, structural predicates, the phi/psi bijection between atomic
// and unsplitable partitions, and exhaustive enumeration.

#include "setpart/bijection.hpp"
#include "setpart/enumeration.hpp"
#include "setpart/error.hpp"
#include "setpart/partition.hpp"
#include "setpart/structure.hpp"

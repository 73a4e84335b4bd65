#pragma once

#include "bpring/error.hpp"
#include "bpring/scalar.hpp"
#include "bpring/group.hpp"
#include "bpring/bimodule.hpp"
#include "bpring/ladder.hpp"
#include "bpring/karoubi.hpp"
#include "bpring/table.hpp"
#include "bpring/fusion.hpp"
#include "bpring/parallel.hpp"
#include "bpring/ring.hpp"
#include "bpring/walls.hpp"

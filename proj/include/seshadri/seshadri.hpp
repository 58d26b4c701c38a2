#pragma once

#include "seshadri/bonded_poset.hpp"
#include "seshadri/case.hpp"
#include "seshadri/demazure.hpp"
#include "seshadri/error.hpp"
#include "seshadri/invariants.hpp"
#include "seshadri/lspath.hpp"
#include "seshadri/rational.hpp"
#include "seshadri/rootsys.hpp"
#include "seshadri/smt.hpp"
#include "seshadri/weyl.hpp"

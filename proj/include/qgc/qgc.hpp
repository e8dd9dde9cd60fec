#pragma once

#include "qgc/clique.hpp"
#include "qgc/code.hpp"
#include "qgc/config.hpp"
#include "qgc/constructions.hpp"
#include "qgc/distance.hpp"
#include "qgc/error.hpp"
#include "qgc/graph.hpp"
#include "qgc/oracle.hpp"
#include "qgc/pauli.hpp"
#include "qgc/report.hpp"
#include "qgc/search.hpp"
#include "qgc/stabilizer.hpp"
#include "qgc/zmod.hpp"

#pragma once

#include "qrag/accessor.hpp"
#include "qrag/amplitude.hpp"
#include "qrag/bitstring.hpp"
#include "qrag/compare.hpp"
#include "qrag/engine.hpp"
#include "qrag/experiment.hpp"
#include "qrag/first_one.hpp"
#include "qrag/generators.hpp"
#include "qrag/grover.hpp"
#include "qrag/instance.hpp"
#include "qrag/keyword_tree.hpp"
#include "qrag/ledger.hpp"
#include "qrag/oracle.hpp"
#include "qrag/player.hpp"
#include "qrag/players.hpp"
#include "qrag/report.hpp"
#include "qrag/rng.hpp"
#include "qrag/util.hpp"

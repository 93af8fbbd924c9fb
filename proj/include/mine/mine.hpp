#ifndef MINE_MINE_HPP
#define MINE_MINE_HPP

#include "mine/ap_verify.hpp"
#include "mine/classifier.hpp"
#include "mine/cost.hpp"
#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/gadgets.hpp"
#include "mine/generators.hpp"
#include "mine/geometry.hpp"
#include "mine/io.hpp"
#include "mine/klabel.hpp"
#include "mine/planarize.hpp"
#include "mine/poly.hpp"
#include "mine/rational.hpp"
#include "mine/solvers/alpha_expansion.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/solvers/elimination.hpp"
#include "mine/solvers/interactions.hpp"
#include "mine/solvers/max_flow.hpp"
#include "mine/solvers/submodular.hpp"
#include "mine/solvers/tree_dp.hpp"
#include "mine/trace.hpp"
#include "mine/w3sat.hpp"

#endif // MINE_MINE_HPP

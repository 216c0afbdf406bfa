#pragma once

#include "cantor.hpp"
#include "interval.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ccov {

struct WitnessNode {
    std::string address_i; // carries the scale-prefix zeros
    std::string address_j;
    int rank = 0;          // rank of the j side; the i side has rank + prefix digits
    Interval image;        // exact product image of the two addressed intervals
};

// Complete binary tree of nested interval pairs whose product images all
// contain t strictly inside.  Stored flat: children of node n at 2n+1, 2n+2.
struct WitnessTree {
    Rational lambda;
    Rational t;
    int scale_prefix = 0; // leading zeros on the i side ((x, y) -> (lambda*x, y))
    int depth = 0;
    std::vector<WitnessNode> nodes;
    int diagonal_count = 0; // nodes with equal sides once the prefix is removed
};

struct Seed {
    int scale_prefix = 0;
    int pair_index = 0; // position in the product catalog
    Rational scaled_target;
    WitnessNode node;
};

// Scales t up by 1/lambda until it enters the certified window, then picks the
// first catalog pair whose open image contains it.  NotCertified if the
// covering certificate fails at this lambda.
Seed select_seed(const Rational& lambda, const Rational& t);

// Expands the seed `depth` times.  At each node, descendant pairs are scanned
// rank by rank in address order; a pair is a candidate when t sits strictly
// inside its product image.  Right-of-diagonal candidates are swapped onto the
// canonical side and duplicates dropped; the first two distinct survivors
// become the children.  ExpansionStalled if some node finds no second
// candidate within scan_limit extra ranks.
WitnessTree build_witness_tree(const Rational& lambda, const Rational& t, int depth,
                               int scan_limit = 24);

// Recomputes everything from the address strings alone: shape, rank
// bookkeeping, image values, strict interior containment, parent-child
// nesting, sibling distinctness.
bool verify_tree(const WitnessTree& tree);

nlohmann::ordered_json witness_tree_json(const WitnessTree& tree);
std::string witness_tree_text(const WitnessTree& tree);
std::string witness_leaves_csv(const WitnessTree& tree);

} // namespace ccov

#include "witness.hpp"

#include "certificates.hpp"
#include "errors.hpp"
#include "images.hpp"
#include "thresholds.hpp"

#include <algorithm>
#include <utility>

namespace ccov {

namespace {

Interval product_image(const Interval& x, const Interval& y) {
    return Interval{x.lo * y.lo, x.hi * y.hi};
}

// Descendant pair of the node being expanded, with t strictly inside its
// product image.  Suffixes are relative to the node's addresses.
struct Open {
    std::string si, sj;
    Interval cell_i, cell_j;
    Interval image;
};

struct Candidate {
    std::string ai, aj;
    Interval image;
};

/* Children of `node`: scan descendants one rank at a time until two distinct
 * normalized pairs contain t strictly inside their images.
 *
 * Strict interior containment is inherited upward (a child cell image sits
 * inside its parent's), so the rank-(d+1) candidates are exactly the
 * qualifying children of the rank-d candidates.  The frontier therefore stays
 * tiny and the scan over all 4^d descendant combinations collapses to a few
 * interval products per level.  Sorting the frontier restores the full
 * lexicographic (addressI, addressJ) scan order, so the selection is
 * identical to the exhaustive enumeration.
 */
std::pair<WitnessNode, WitnessNode> expand(const WitnessNode& node, const Rational& lambda,
                                           const Rational& t, int prefix, int scan_limit) {
    const size_t p = static_cast<size_t>(prefix);
    std::vector<Open> frontier{{"", "",
                                interval_of(node.address_i, lambda),
                                interval_of(node.address_j, lambda),
                                node.image}};
    Rational width_i =
        rational_pow(lambda, static_cast<unsigned>(node.rank + prefix) + 1);
    Rational width_j = rational_pow(lambda, static_cast<unsigned>(node.rank) + 1);

    for (int d = 1; d <= scan_limit && !frontier.empty(); ++d) {
        std::vector<Open> next;
        for (const Open& o : frontier) {
            const Interval half_i[2] = {{o.cell_i.lo, o.cell_i.lo + width_i},
                                        {o.cell_i.hi - width_i, o.cell_i.hi}};
            const Interval half_j[2] = {{o.cell_j.lo, o.cell_j.lo + width_j},
                                        {o.cell_j.hi - width_j, o.cell_j.hi}};
            for (int bi = 0; bi < 2; ++bi) {
                for (int bj = 0; bj < 2; ++bj) {
                    Interval img = product_image(half_i[bi], half_j[bj]);
                    if (!(img.lo < t && t < img.hi)) continue;
                    next.push_back({o.si + static_cast<char>('0' + bi),
                                    o.sj + static_cast<char>('0' + bj), half_i[bi],
                                    half_j[bj], std::move(img)});
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const Open& x, const Open& y) {
            return x.si != y.si ? x.si < y.si : x.sj < y.sj;
        });
        width_i *= lambda;
        width_j *= lambda;

        std::vector<Candidate> found;
        for (const Open& o : next) {
            std::string ai = node.address_i + o.si;
            std::string aj = node.address_j + o.sj;
            // Canonical orientation: the i side (prefix stripped) must not
            // lie to the right of the j side.  Possible only under a
            // diagonal node, where the mirrored twin is also scanned.
            if (ai.compare(p, std::string::npos, aj) > 0) {
                std::string swapped = std::string(p, '0') + aj;
                aj = ai.substr(p);
                ai = std::move(swapped);
            }
            bool seen = false;
            for (const Candidate& c : found)
                if (c.ai == ai && c.aj == aj) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            found.push_back({std::move(ai), std::move(aj), o.image});
            if (found.size() == 2) {
                WitnessNode first{found[0].ai, found[0].aj, node.rank + d,
                                  found[0].image};
                WitnessNode second{found[1].ai, found[1].aj, node.rank + d,
                                   found[1].image};
                return {std::move(first), std::move(second)};
            }
        }
        frontier = std::move(next);
    }
    fail(errc::expansion_stalled,
         "no second covering pair within " + std::to_string(scan_limit) +
             " ranks below (" + node.address_i + ", " + node.address_j +
             ") for target " + fraction_string(t));
}

} // namespace

Seed select_seed(const Rational& lambda, const Rational& t) {
    require_lambda_range(lambda);
    if (!(t > 0) || !(t < 1)) fail(errc::invalid_argument, "t must lie in (0, 1)");

    Certificate cert = certify_st_continuum(lambda);
    if (!cert.certified)
        fail(errc::not_certified,
             "covering certificate fails at lambda = " + fraction_string(lambda) +
                 " (first failing check: " + cert.first_failing + ")");

    Rational window_lo =
        (1 - lambda) * (1 - lambda + lambda * lambda - rational_pow(lambda, 3));
    int n0 = 0;
    Rational scaled = t;
    while (!(scaled > window_lo)) {
        scaled /= lambda;
        ++n0;
    }
    if (!(scaled < 1))
        fail(errc::no_window, "scaled target left the window; lambda <= window bound");

    const auto& pairs = st_catalog_pairs();
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        Interval img = product_image(interval_of(pairs[idx].i, lambda),
                                     interval_of(pairs[idx].j, lambda));
        if (img.lo < scaled && scaled < img.hi) {
            std::string ai = std::string(static_cast<size_t>(n0), '0') + pairs[idx].i;
            WitnessNode node{ai, pairs[idx].j, 3,
                             product_image(interval_of(ai, lambda),
                                           interval_of(pairs[idx].j, lambda))};
            return Seed{n0, static_cast<int>(idx), std::move(scaled), std::move(node)};
        }
    }
    fail(errc::no_window,
         "target " + fraction_string(t) + " lies on the boundary of every catalog image");
}

WitnessTree build_witness_tree(const Rational& lambda, const Rational& t, int depth,
                               int scan_limit) {
    if (depth < 1) fail(errc::invalid_argument, "depth must be >= 1");
    if (scan_limit < 1) fail(errc::invalid_argument, "scan limit must be >= 1");
    Seed seed = select_seed(lambda, t);

    WitnessTree tree;
    tree.lambda = lambda;
    tree.t = t;
    tree.scale_prefix = seed.scale_prefix;
    tree.depth = depth;
    size_t node_count = (static_cast<size_t>(1) << (depth + 1)) - 1;
    tree.nodes.resize(node_count);
    tree.nodes[0] = std::move(seed.node);

    size_t internal = (static_cast<size_t>(1) << depth) - 1;
    for (size_t idx = 0; idx < internal; ++idx) {
        auto children =
            expand(tree.nodes[idx], lambda, t, tree.scale_prefix, scan_limit);
        tree.nodes[2 * idx + 1] = std::move(children.first);
        tree.nodes[2 * idx + 2] = std::move(children.second);
    }

    const size_t p = static_cast<size_t>(tree.scale_prefix);
    for (const WitnessNode& nd : tree.nodes)
        if (nd.address_i.compare(p, std::string::npos, nd.address_j) == 0)
            ++tree.diagonal_count;
    return tree;
}

bool verify_tree(const WitnessTree& tree) {
    if (!(tree.lambda > 0) || !(tree.lambda < Rational{1, 2})) return false;
    if (!(tree.t > 0) || !(tree.t < 1)) return false;
    if (tree.depth < 1 || tree.scale_prefix < 0) return false;
    size_t expected = (static_cast<size_t>(1) << (tree.depth + 1)) - 1;
    if (tree.nodes.size() != expected) return false;

    const size_t p = static_cast<size_t>(tree.scale_prefix);
    const WitnessNode& root = tree.nodes[0];
    if (root.address_i.size() < p) return false;
    for (size_t d = 0; d < p; ++d)
        if (root.address_i[d] != '0') return false;

    for (const WitnessNode& nd : tree.nodes) {
        if (!valid_address(nd.address_i) || !valid_address(nd.address_j)) return false;
        if (nd.rank < 1) return false;
        if (nd.address_j.size() != static_cast<size_t>(nd.rank)) return false;
        if (nd.address_i.size() != static_cast<size_t>(nd.rank) + p) return false;
        Interval img = product_image(interval_of(nd.address_i, tree.lambda),
                                     interval_of(nd.address_j, tree.lambda));
        if (!(img == nd.image)) return false;
        if (!(img.lo < tree.t && tree.t < img.hi)) return false;
    }

    for (size_t idx = 0; 2 * idx + 2 < tree.nodes.size(); ++idx) {
        const WitnessNode& parent = tree.nodes[idx];
        const WitnessNode& left = tree.nodes[2 * idx + 1];
        const WitnessNode& right = tree.nodes[2 * idx + 2];
        for (const WitnessNode* child : {&left, &right}) {
            if (child->rank <= parent.rank) return false;
            if (!child->address_i.starts_with(parent.address_i)) return false;
            if (!child->address_j.starts_with(parent.address_j)) return false;
        }
        if (left.address_i == right.address_i && left.address_j == right.address_j)
            return false;
    }
    return true;
}

nlohmann::ordered_json witness_tree_json(const WitnessTree& tree) {
    nlohmann::ordered_json j;
    j["kind"] = "witness_tree";
    j["lambda"] = fraction_string(tree.lambda);
    j["t"] = fraction_string(tree.t);
    j["scale_prefix"] = tree.scale_prefix;
    j["depth"] = tree.depth;
    j["node_count"] = tree.nodes.size();
    j["diagonal_count"] = tree.diagonal_count;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const WitnessNode& nd : tree.nodes) {
        nlohmann::ordered_json jn;
        jn["address_i"] = nd.address_i;
        jn["address_j"] = nd.address_j;
        jn["rank"] = nd.rank;
        jn["image"] = {fraction_string(nd.image.lo), fraction_string(nd.image.hi)};
        j["nodes"].push_back(std::move(jn));
    }
    return j;
}

std::string witness_tree_text(const WitnessTree& tree) {
    size_t leaves = static_cast<size_t>(1) << tree.depth;
    std::string out = "witness tree: lambda = " + fraction_string(tree.lambda) +
                      ", t = " + fraction_string(tree.t) + "\n";
    out += "scale prefix = " + std::to_string(tree.scale_prefix) + "\n";
    out += "depth = " + std::to_string(tree.depth) +
           ", nodes = " + std::to_string(tree.nodes.size()) +
           ", leaves = " + std::to_string(leaves) + "\n";
    out += "diagonal nodes = " + std::to_string(tree.diagonal_count) + "\n";
    const WitnessNode& root = tree.nodes.front();
    out += "root pair: (" + root.address_i + ", " + root.address_j + ") rank " +
           std::to_string(root.rank) + ", image [" + fraction_string(root.image.lo) +
           ", " + fraction_string(root.image.hi) + "]\n";
    out += std::string("verified: ") + (verify_tree(tree) ? "yes" : "NO") + "\n";
    out += "full node list: use json format; leaf pairs: use the leaves-only csv\n";
    return out;
}

std::string witness_leaves_csv(const WitnessTree& tree) {
    std::string out = "address_i,address_j,rank,image_lo,image_hi\n";
    size_t first_leaf = (static_cast<size_t>(1) << tree.depth) - 1;
    for (size_t idx = first_leaf; idx < tree.nodes.size(); ++idx) {
        const WitnessNode& nd = tree.nodes[idx];
        out += nd.address_i + "," + nd.address_j + "," + std::to_string(nd.rank) + "," +
               fraction_string(nd.image.lo) + "," + fraction_string(nd.image.hi) + "\n";
    }
    return out;
}

} // namespace ccov

#pragma once

#include "voteselect/dataset.hpp"
#include "voteselect/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace voteselect {

struct NearestEnemy {
    int index = -1;
    double distance = 0.0;
};

// Closest instance with a different label; distance ties break to the
// lowest index. Throws NoEnemyError when every instance shares i's label.
NearestEnemy nearest_enemy(const Dataset& ds, const DistanceMatrix& dist, int i);

// Local set of i: every instance strictly closer to i than i's nearest
// enemy. Contains i itself unless the nearest enemy is at distance zero.
// All members carry i's label.
struct LocalSetTable {
    std::vector<std::vector<int>> sets;  // ascending member indices
    std::vector<NearestEnemy> enemies;

    static LocalSetTable compute(const Dataset& ds, const DistanceMatrix& dist);
};

enum class BallotVariant { included, excluded };

// An approval election. For elections derived from a training set, voters
// and candidates are both the training instances; the two counts may
// differ for hand-built fixtures. The committee-size target t enters all
// rules only through q = t/n, carried exactly; t_int = floor(q * voters)
// is materialized for the sequential load-balancing rule.
struct Election {
    int voters = 0;
    int candidates = 0;
    std::vector<std::vector<int>> ballots; // per voter, ascending candidate ids
    Rational q;
    std::optional<long> t_int;

    Rational cost() const { return Rational(1) / q; } // n/t, the per-winner price
};

// Ballot i is the local set of instance i (variant included) or the local
// set minus the instance itself (variant excluded).
Election build_election(const Dataset& ds, const DistanceMatrix& dist,
                        BallotVariant variant, const Rational& q);

// Hand-built election; validates ballots and fills t_int.
Election make_election(int voters, int candidates,
                       std::vector<std::vector<int>> ballots, const Rational& q);

// Text fixture format, one line per voter: "0: 1 2 5". Candidate count is
// the largest id seen plus one unless given explicitly.
Election parse_election(std::istream& in, const Rational& q, int candidates = -1);
std::string format_election(const Election& e);

} // namespace voteselect

#include "voteselect/localset.hpp"

#include "voteselect/errors.hpp"

#include <algorithm>
#include <sstream>

namespace voteselect {

NearestEnemy nearest_enemy(const Dataset& ds, const DistanceMatrix& dist, int i) {
    NearestEnemy best;
    for (int j = 0; j < ds.n(); ++j) {
        if (ds.labels[j] == ds.labels[i]) continue;
        double d = dist.at(i, j);
        if (best.index == -1 || d < best.distance) {
            best.index = j;
            best.distance = d;
        }
    }
    if (best.index == -1)
        throw NoEnemyError("no enemy instances: instance " + std::to_string(i) +
                           " has no differently labeled peer");
    return best;
}

LocalSetTable LocalSetTable::compute(const Dataset& ds, const DistanceMatrix& dist) {
    LocalSetTable table;
    int n = ds.n();
    table.sets.resize(n);
    table.enemies.resize(n);
    for (int i = 0; i < n; ++i) {
        NearestEnemy ne = nearest_enemy(ds, dist, i);
        table.enemies[i] = ne;
        for (int j = 0; j < n; ++j)
            if (dist.at(i, j) < ne.distance) table.sets[i].push_back(j);
    }
    return table;
}

Election build_election(const Dataset& ds, const DistanceMatrix& dist,
                        BallotVariant variant, const Rational& q) {
    if (q <= 0) throw ArgumentError("build_election: q must be positive");
    LocalSetTable table = LocalSetTable::compute(ds, dist);

    Election e;
    e.voters = ds.n();
    e.candidates = ds.n();
    e.q = q;
    e.t_int = floor_to_long(q * e.voters);
    e.ballots.resize(e.voters);
    for (int i = 0; i < e.voters; ++i) {
        if (variant == BallotVariant::included) {
            e.ballots[i] = table.sets[i];
        } else {
            for (int j : table.sets[i])
                if (j != i) e.ballots[i].push_back(j);
        }
    }
    return e;
}

Election make_election(int voters, int candidates,
                       std::vector<std::vector<int>> ballots, const Rational& q) {
    if (q <= 0) throw ArgumentError("make_election: q must be positive");
    if (voters < 1 || candidates < 1 || static_cast<int>(ballots.size()) != voters)
        throw ArgumentError("make_election: bad shape");
    for (auto& b : ballots) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int c : b)
            if (c < 0 || c >= candidates)
                throw ArgumentError("make_election: candidate id out of range");
    }
    Election e;
    e.voters = voters;
    e.candidates = candidates;
    e.ballots = std::move(ballots);
    e.q = q;
    e.t_int = floor_to_long(q * voters);
    return e;
}

Election parse_election(std::istream& in, const Rational& q, int candidates) {
    std::vector<std::vector<int>> ballots;
    std::string line;
    int max_id = -1;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw FormatError("election line " + std::to_string(line_no) + ": missing ':'");
        int voter;
        try {
            voter = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw FormatError("election line " + std::to_string(line_no) + ": bad voter index");
        }
        if (voter != static_cast<int>(ballots.size()))
            throw FormatError("election line " + std::to_string(line_no) +
                              ": expected voter " + std::to_string(ballots.size()));
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> ballot;
        std::string tok;
        while (rest >> tok) {
            try {
                ballot.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw FormatError("election line " + std::to_string(line_no) +
                                  ": bad candidate id '" + tok + "'");
            }
        }
        for (int c : ballot) max_id = std::max(max_id, c);
        ballots.push_back(std::move(ballot));
    }
    if (ballots.empty()) throw FormatError("election fixture is empty");
    int cand = candidates > 0 ? candidates
                              : std::max(max_id + 1, static_cast<int>(ballots.size()));
    int voters = static_cast<int>(ballots.size());
    return make_election(voters, cand, std::move(ballots), q);
}

std::string format_election(const Election& e) {
    std::ostringstream out;
    for (int i = 0; i < e.voters; ++i) {
        out << i << ":";
        for (int c : e.ballots[i]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

} // namespace voteselect

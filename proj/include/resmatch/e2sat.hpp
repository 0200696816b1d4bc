#pragma once

// Max E2-SAT instances: a DIMACS CNF subset of width exactly two, strict
// validation (every variable in at least two clauses), exhaustive optimum,
// and seeded random generation.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "resmatch/limits.hpp"

namespace resmatch {

class E2SatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Literal {
    int var = 0;  // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Two literals over distinct variables, stored with ascending variable index.
struct Clause {
    Literal first;
    Literal second;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

using Assignment = std::vector<std::uint8_t>;  // bit per variable, index 0 = x_1

class E2SatInstance {
public:
    E2SatInstance() = default;

    // Normalizes literal order inside each clause and rejects repeated
    // variables and duplicate clauses. Clause order is preserved: clause j
    // is the 1-based input position.
    E2SatInstance(int variable_count, std::vector<Clause> clauses)
        : n_(variable_count), clauses_(std::move(clauses)) {
        if (n_ < 0)
            throw E2SatError("negative variable count");
        for (Clause& c : clauses_) {
            if (c.first.var > c.second.var)
                std::swap(c.first, c.second);
            if (c.first.var < 1 || c.second.var > n_)
                throw E2SatError("literal variable out of range");
            if (c.first.var == c.second.var)
                throw E2SatError("clause repeats variable x" + std::to_string(c.first.var));
        }
        std::vector<Clause> sorted = clauses_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw E2SatError("duplicate clause");
    }

    int variable_count() const { return n_; }
    int clause_count() const { return static_cast<int>(clauses_.size()); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause& clause(int j) const { return clauses_.at(static_cast<size_t>(j - 1)); }  // 1-based

    // r(i): number of clauses containing a literal of x_i.
    std::vector<int> occurrence_counts() const {
        std::vector<int> r(static_cast<size_t>(n_), 0);
        for (const Clause& c : clauses_) {
            ++r[static_cast<size_t>(c.first.var - 1)];
            ++r[static_cast<size_t>(c.second.var - 1)];
        }
        return r;
    }

private:
    int n_ = 0;
    std::vector<Clause> clauses_;
};

// Variables violating the standing assumption r(i) >= 2; empty means strict.
inline std::vector<int> validate_strict(const E2SatInstance& inst) {
    std::vector<int> bad;
    auto r = inst.occurrence_counts();
    for (int i = 1; i <= inst.variable_count(); ++i)
        if (r[static_cast<size_t>(i - 1)] < 2)
            bad.push_back(i);
    return bad;
}

inline bool literal_satisfied(const Literal& l, const Assignment& a) {
    bool value = a.at(static_cast<size_t>(l.var - 1)) != 0;
    return l.negated ? !value : value;
}

inline int count_satisfied(const E2SatInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.variable_count())
        throw E2SatError("assignment length does not match variable count");
    int k = 0;
    for (const Clause& c : inst.clauses())
        if (literal_satisfied(c.first, a) || literal_satisfied(c.second, a))
            ++k;
    return k;
}

struct MaxSatResult {
    int optimum = 0;
    Assignment witness;  // lexicographically first attaining the optimum
};

inline MaxSatResult max_sat_bruteforce(const E2SatInstance& inst, int variable_budget = 20) {
    const int n = inst.variable_count();
    if (n > variable_budget)
        throw BudgetExceededError("brute-force budget: " + std::to_string(n) + " > " +
                                  std::to_string(variable_budget) + " variables");
    MaxSatResult best;
    best.optimum = -1;
    Assignment a(static_cast<size_t>(n), 0);
    // Counting with x_1 as the most significant bit walks assignments in
    // lexicographic order.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i)
            a[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1;
        int k = count_satisfied(inst, a);
        if (k > best.optimum) {
            best.optimum = k;
            best.witness = a;
        }
    }
    if (best.optimum < 0) {  // n == 0
        best.optimum = 0;
        best.witness = {};
    }
    return best;
}

// ---------------------------------------------------------------------------
// DIMACS subset: header "p cnf n m", clause lines "<lit> <lit> 0",
// comment lines starting with "c".

inline E2SatInstance parse_e2sat(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Clause> clauses;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;  // blank
        if (tok == "c")
            continue;
        if (tok == "p") {
            if (n != -1)
                throw E2SatError("line " + std::to_string(lineno) + ": repeated header");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw E2SatError("line " + std::to_string(lineno) + ": malformed header");
            continue;
        }
        if (n == -1)
            throw E2SatError("clause before header");
        std::vector<int> lits;
        ls.clear();
        ls.str(line);
        int v;
        while (ls >> v) {
            if (v == 0)
                break;
            lits.push_back(v);
        }
        if (ls.fail() && !ls.eof())
            throw E2SatError("line " + std::to_string(lineno) + ": malformed clause");
        if (lits.size() != 2)
            throw E2SatError("line " + std::to_string(lineno) + ": clause has width " +
                             std::to_string(lits.size()) + ", want 2");
        auto to_lit = [&](int raw) {
            int var = std::abs(raw);
            if (var < 1 || var > n)
                throw E2SatError("line " + std::to_string(lineno) + ": variable " +
                                 std::to_string(var) + " out of range");
            return Literal{var, raw < 0};
        };
        clauses.push_back(Clause{to_lit(lits[0]), to_lit(lits[1])});
    }
    if (n == -1)
        throw E2SatError("missing header");
    if (static_cast<int>(clauses.size()) != m)
        throw E2SatError("header declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(clauses.size()));
    return E2SatInstance(n, std::move(clauses));
}

inline std::string emit_dimacs(const E2SatInstance& inst) {
    std::ostringstream out;
    out << "p cnf " << inst.variable_count() << " " << inst.clause_count() << "\n";
    for (const Clause& c : inst.clauses()) {
        out << (c.first.negated ? -c.first.var : c.first.var) << " "
            << (c.second.negated ? -c.second.var : c.second.var) << " 0\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Seeded random strict instances: m distinct clauses over n variables with
// every variable occurring at least twice. Deterministic per seed.

inline E2SatInstance gen_random(int n, int m, std::uint64_t seed, int max_attempts = 10000) {
    if (n < 2)
        throw E2SatError("need at least two variables");
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m > 4 * pairs)
        throw E2SatError("only " + std::to_string(4 * pairs) + " distinct 2-clauses exist over " +
                         std::to_string(n) + " variables");
    if (2LL * m < 2LL * n)
        throw E2SatError("cannot give every variable two occurrences: " + std::to_string(2 * m) +
                         " literal slots < " + std::to_string(2 * n));
    std::vector<Clause> pool;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int na = 0; na < 2; ++na)
                for (int nb = 0; nb < 2; ++nb)
                    pool.push_back(Clause{Literal{a, na == 1}, Literal{b, nb == 1}});
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Clause> pick = pool;
        for (size_t i = 0; i < static_cast<size_t>(m); ++i) {
            std::uniform_int_distribution<size_t> dist(i, pick.size() - 1);
            std::swap(pick[i], pick[dist(rng)]);
        }
        pick.resize(static_cast<size_t>(m));
        E2SatInstance candidate(n, pick);
        if (validate_strict(candidate).empty())
            return candidate;
    }
    throw E2SatError("retry budget exhausted: no strict instance with n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
}

}  // namespace resmatch

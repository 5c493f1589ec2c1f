#include "totmatch/enumerate.hpp"

#include "totmatch/solver.hpp"

#include <algorithm>
#include <sstream>

namespace totmatch {

std::vector<TotalMatching> enumerate_total_matchings(const Graph& g, EnumerationMode mode,
                                                     int element_limit) {
    const int k = g.vertex_count + g.edge_count();
    if (k > element_limit)
        throw LimitError("graph has " + std::to_string(k) + " elements, limit is " +
                         std::to_string(element_limit));
    auto adj = element_adjacency_masks(g);
    const unsigned long long all = k == 64 ? ~0ULL : (1ULL << k) - 1;

    std::vector<TotalMatching> out;
    std::vector<int> current;
    std::size_t max_size = 0;
    // covered: elements adjacent to or contained in the current set.
    auto dfs = [&](auto&& self, int next, unsigned long long covered) -> void {
        switch (mode) {
            case EnumerationMode::All:
                out.push_back(current);
                break;
            case EnumerationMode::Maximal:
                if (covered == all) out.push_back(current);
                break;
            case EnumerationMode::Maximum:
                if (current.size() > max_size) {
                    max_size = current.size();
                    out.clear();
                }
                if (current.size() == max_size) out.push_back(current);
                break;
        }
        for (int d = next; d < k; ++d) {
            if (covered & (1ULL << d)) continue;
            current.push_back(d);
            self(self, d + 1, covered | adj[d] | (1ULL << d));
            current.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

bool is_total_matching(const Graph& g, const TotalMatching& t) {
    auto elems = elements(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= static_cast<int>(elems.size())) return false;
        if (i > 0 && t[i] <= t[i - 1]) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (adjacent(g, elems[t[i]], elems[t[j]])) return false;
    }
    return true;
}

QVec characteristic_vector(const Graph& g, const TotalMatching& t) {
    QVec chi(g.vertex_count + g.edge_count(), Rational(0));
    for (int d : t) chi.at(d) = 1;
    return chi;
}

int nu_t(const Graph& g, int element_limit) {
    if (is_complete_bipartite(g)) {
        const int r = static_cast<int>(g.bipartition->side_a.size());
        const int s = static_cast<int>(g.bipartition->side_b.size());
        QVec ones(r + s + r * s, Rational(1));
        auto [value, witness] = solve_kbipartite(r, s, ones);
        return static_cast<int>(witness.size());
    }
    auto best = enumerate_total_matchings(g, EnumerationMode::Maximum, element_limit);
    return best.empty() ? 0 : static_cast<int>(best.front().size());
}

WeightedMatching max_weight_total_matching_bruteforce(const Graph& g, const QVec& weights,
                                                      int element_limit) {
    const int k = g.vertex_count + g.edge_count();
    if (static_cast<int>(weights.size()) != k)
        throw std::invalid_argument("weight vector has wrong length");
    if (k > element_limit)
        throw LimitError("graph has " + std::to_string(k) + " elements, limit is " +
                         std::to_string(element_limit));
    auto adj = element_adjacency_masks(g);
    WeightedMatching best{Rational(0), {}};
    std::vector<int> current;
    Rational current_value = 0;
    // Lexicographic preorder; strict improvement keeps the lex-smallest tie.
    auto dfs = [&](auto&& self, int next, unsigned long long covered) -> void {
        if (current_value > best.value) best = {current_value, current};
        for (int d = next; d < k; ++d) {
            if (covered & (1ULL << d)) continue;
            current.push_back(d);
            current_value += weights[d];
            self(self, d + 1, covered | adj[d] | (1ULL << d));
            current_value -= weights[d];
            current.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

QVec parse_element_vector(const Graph& g, const std::string& text) {
    const int k = g.vertex_count + g.edge_count();
    QVec values(k);
    std::vector<bool> seen(k, false);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string id, value;
        if (!(ls >> id)) continue;
        if (id == "c") continue;
        if (!(ls >> value)) throw ParseError(line_no, "expected '<element-id> <rational>'");
        int index;
        try {
            index = element_index(g, parse_element_id(id));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (seen[index]) throw ParseError(line_no, "duplicate entry for " + id);
        seen[index] = true;
        try {
            values[index] = parse_rational(value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    for (int i = 0; i < k; ++i)
        if (!seen[i])
            throw ParseError(line_no, "missing entry for " + element_id(elements(g)[i]));
    return values;
}

std::string write_element_vector(const Graph& g, const QVec& values) {
    auto elems = elements(g);
    if (values.size() != elems.size())
        throw std::invalid_argument("vector length does not match element count");
    std::ostringstream out;
    for (std::size_t i = 0; i < elems.size(); ++i)
        out << element_id(elems[i]) << " " << values[i] << "\n";
    return out.str();
}

} // namespace totmatch

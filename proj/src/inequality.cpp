#include "totmatch/inequality.hpp"

#include <algorithm>
#include <sstream>

namespace totmatch {

Space element_space(const Graph& g) {
    Space s;
    for (const auto& d : elements(g)) s.ids.push_back(element_id(d));
    return s;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Nonneg: return "nonneg";
        case Family::Node: return "node";
        case Family::Edge: return "edge";
        case Family::BalancedBiclique: return "balanced-biclique";
        case Family::NonbalancedLifted: return "nonbalanced-lifted";
        case Family::EfRaw: return "ef-raw";
        case Family::Projected: return "projected";
        case Family::Other: return "other";
    }
    return "other";
}

LinearInequality::LinearInequality(QVec coeffs_, Rational rhs_, Rel rel_, Family family_,
                                   std::string note_)
    : coeffs(std::move(coeffs_)), rhs(std::move(rhs_)), rel(rel_), family(family_),
      note(std::move(note_)) {
    QVec full = coeffs;
    full.push_back(rhs);
    full = normalized_integral(full);
    if (rel == Rel::Eq) {
        for (const auto& x : full) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : full) y = -y;
            break;
        }
    }
    rhs = full.back();
    full.pop_back();
    coeffs = std::move(full);
}

bool LinearInequality::satisfied_by(const QVec& point) const {
    Rational lhs = dot(coeffs, point);
    return rel == Rel::Eq ? lhs == rhs : lhs <= rhs;
}

bool row_less(const LinearInequality& a, const LinearInequality& b) {
    if (a.rel != b.rel) return a.rel == Rel::Eq;
    if (a.coeffs != b.coeffs)
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                            b.coeffs.end());
    return a.rhs < b.rhs;
}

void HPolytope::add(LinearInequality row) {
    if (static_cast<int>(row.coeffs.size()) != space.dimension())
        throw std::invalid_argument("row dimension does not match coordinate space");
    rows.push_back(std::move(row));
}

bool HPolytope::contains(const QVec& point) const {
    for (const auto& row : rows)
        if (!row.satisfied_by(point)) return false;
    return true;
}

void HPolytope::canonicalize() {
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const LinearInequality& a, const LinearInequality& b) {
                               return a.same_row(b);
                           }),
               rows.end());
}

std::vector<LinearInequality> row_set_difference(const std::vector<LinearInequality>& a,
                                                 const std::vector<LinearInequality>& b) {
    std::vector<LinearInequality> out;
    for (const auto& row : a) {
        bool found = false;
        for (const auto& other : b)
            if (row.same_row(other)) {
                found = true;
                break;
            }
        if (!found) out.push_back(row);
    }
    return out;
}

bool same_row_set(const std::vector<LinearInequality>& a, const std::vector<LinearInequality>& b) {
    return row_set_difference(a, b).empty() && row_set_difference(b, a).empty();
}

std::string write_row(const LinearInequality& row, bool with_note) {
    std::ostringstream out;
    for (const auto& c : row.coeffs) out << c << " ";
    out << (row.rel == Rel::Eq ? "=" : "<=") << " " << row.rhs;
    if (with_note) {
        out << " c " << family_name(row.family);
        if (!row.note.empty()) out << " " << row.note;
    }
    return out.str();
}

std::string write_hpolytope(const HPolytope& p, bool with_notes) {
    std::ostringstream out;
    out << "space";
    for (const auto& id : p.space.ids) out << " " << id;
    out << "\n";
    for (const auto& row : p.rows) out << write_row(row, with_notes) << "\n";
    return out.str();
}

HPolytope parse_hpolytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    HPolytope p;
    bool have_space = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (token == "c") continue;
        if (token == "space") {
            if (have_space) throw ParseError(line_no, "duplicate space header");
            std::string id;
            while (ls >> id) p.space.ids.push_back(id);
            if (p.space.ids.empty()) throw ParseError(line_no, "empty space header");
            have_space = true;
            continue;
        }
        if (!have_space) throw ParseError(line_no, "row before space header");
        QVec coeffs;
        Rel rel = Rel::LessEq;
        bool have_rel = false;
        std::string tok = token;
        do {
            if (tok == "<=") {
                rel = Rel::LessEq;
                have_rel = true;
                break;
            }
            if (tok == "=") {
                rel = Rel::Eq;
                have_rel = true;
                break;
            }
            try {
                coeffs.push_back(parse_rational(tok));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
        } while (ls >> tok);
        if (!have_rel) throw ParseError(line_no, "row missing relation '<=' or '='");
        if (static_cast<int>(coeffs.size()) != p.space.dimension())
            throw ParseError(line_no, "row has " + std::to_string(coeffs.size()) +
                                          " coefficients, space has " +
                                          std::to_string(p.space.dimension()));
        std::string rhs_tok;
        if (!(ls >> rhs_tok)) throw ParseError(line_no, "row missing right-hand side");
        Rational rhs;
        try {
            rhs = parse_rational(rhs_tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        std::string trailer, note;
        if (ls >> trailer) {
            if (trailer != "c") throw ParseError(line_no, "unexpected token '" + trailer + "'");
            std::getline(ls, note);
            if (!note.empty() && note[0] == ' ') note.erase(0, 1);
        }
        Family fam = Family::Other;
        std::string rest = note;
        if (!note.empty()) {
            auto space_at = note.find(' ');
            std::string head = note.substr(0, space_at);
            for (Family f : {Family::Nonneg, Family::Node, Family::Edge, Family::BalancedBiclique,
                             Family::NonbalancedLifted, Family::EfRaw, Family::Projected,
                             Family::Other}) {
                if (family_name(f) == head) {
                    fam = f;
                    rest = space_at == std::string::npos ? "" : note.substr(space_at + 1);
                    break;
                }
            }
        }
        p.rows.emplace_back(std::move(coeffs), rhs, rel, fam, rest);
    }
    if (!have_space) throw ParseError(line_no, "missing space header");
    return p;
}

} // namespace totmatch

#include "tilingforge/mutation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilingforge/error.hpp"
#include "tilingforge/kasteleyn.hpp"

namespace tilingforge {

std::string reversed_arrow_id(const std::string& id) {
    if (!id.empty() && id.back() == '\'') return id.substr(0, id.size() - 1);
    return id + "'";
}

std::string meson_id(const std::string& a, const std::string& b) { return "[" + a + "|" + b + "]"; }

namespace {

Rational signed_value(const Term& t) { return t.sign < 0 ? Rational(-t.coeff) : t.coeff; }

Term term_from_value(const Rational& value, std::vector<std::string> word) {
    Term t;
    t.sign = value < 0 ? -1 : 1;
    t.coeff = value < 0 ? Rational(-value) : value;
    t.word = std::move(word);
    return t;
}

std::string fresh_id(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.contains(base)) return base;
    for (int k = 2;; ++k) {
        std::string candidate = base + "#" + std::to_string(k);
        if (!taken.contains(candidate)) return candidate;
    }
}

}  // namespace

std::pair<Quiver, MutationRecord> seiberg_mutate(const Quiver& q, const std::string& v) {
    if (!q.node_index(v)) throw PreconditionError("unknown node '" + v + "'");
    const ValidationReport report = validate_quiver(q);
    if (!report.ok()) throw PreconditionError("input quiver fails validation; run validate for details");

    std::vector<std::string> incoming, outgoing;
    for (const auto& a : q.arrows()) {
        if (a.to == v) incoming.push_back(a.id);
        if (a.from == v) outgoing.push_back(a.id);
    }
    if (incoming.size() != 2 || outgoing.size() != 2)
        throw NotDualizableError("node " + v + " has " + std::to_string(incoming.size()) + " incoming and " +
                                 std::to_string(outgoing.size()) + " outgoing arrows; toric duality needs 2 and 2");
    for (const auto& id : incoming) {
        const Arrow& a = q.arrow(id);
        if (a.from == a.to) throw NotDualizableError("node " + v + " carries a loop");
    }

    MutationRecord record;
    record.node = v;
    record.terms_before = q.num_terms();

    std::set<std::string> taken;
    for (const auto& a : q.arrows()) taken.insert(a.id);

    // Reversed arrows keep their slot in the arrow list.
    std::map<std::string, std::string> reversed_of;
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows()) {
        if (a.from == v || a.to == v) {
            taken.erase(a.id);
            std::string rid = fresh_id(reversed_arrow_id(a.id), taken);
            taken.insert(rid);
            reversed_of[a.id] = rid;
            record.reversed.emplace_back(a.id, rid);
            arrows.push_back({rid, a.to, a.from});
        } else {
            arrows.push_back(a);
        }
    }

    std::map<std::pair<std::string, std::string>, std::string> meson_of;
    for (const auto& a : incoming)
        for (const auto& b : outgoing) {
            std::string mid = fresh_id(meson_id(a, b), taken);
            taken.insert(mid);
            meson_of[{a, b}] = mid;
            record.mesons.push_back({mid, a, b});
            arrows.push_back({mid, q.arrow(a).from, q.arrow(b).to});
        }

    std::map<std::string, std::vector<int>> substituted_signs;
    std::vector<Term> terms;
    for (const auto& t : q.terms()) {
        std::size_t visits = 0;
        for (const auto& id : t.word)
            if (q.arrow(id).to == v) ++visits;
        if (visits > 1) throw MultiVisitError("a superpotential term passes through node " + v + " more than once");
        Term out = t;
        if (visits == 1) {
            const std::size_t n = t.word.size();
            std::size_t pos = n;
            for (std::size_t i = 0; i < n; ++i)
                if (q.arrow(t.word[i]).to == v) pos = i;
            const std::string& a = t.word[pos];
            const std::string& b = t.word[(pos + 1) % n];
            auto it = meson_of.find({a, b});
            if (it == meson_of.end()) throw ToricViolationError("term enters node " + v + " without leaving it");
            // Rotate so that the pair sits at the front, then collapse it.
            std::vector<std::string> word;
            word.push_back(it->second);
            for (std::size_t k = 2; k < n; ++k) word.push_back(t.word[(pos + k) % n]);
            out.word = std::move(word);
            substituted_signs[it->second].push_back(t.sign);
        }
        terms.push_back(std::move(out));
    }

    for (const auto& meson : record.mesons) {
        const auto& signs = substituted_signs[meson.id];
        if (signs.size() != 1)
            throw ToricViolationError("meson " + meson.id + " was substituted " + std::to_string(signs.size()) +
                                      " times; its cubic term sign is undetermined");
        Term t;
        t.sign = -signs.front();
        t.word = {meson.id, reversed_of.at(meson.outgoing), reversed_of.at(meson.incoming)};
        terms.push_back(std::move(t));
    }

    Quiver result(q.nodes(), std::move(arrows), std::move(terms));
    const ValidationReport after = validate_quiver(result);
    if (!after.ok()) {
        std::string why = after.diagnostics.empty() ? "validation failed" : after.diagnostics.front();
        throw ToricViolationError("mutated quiver is not toric: " + why);
    }
    record.terms_after = result.num_terms();
    return {std::move(result), std::move(record)};
}

Quiver reduce_mass_terms(const Quiver& q, std::vector<std::pair<std::string, std::string>>& removed) {
    std::vector<Arrow> arrows = q.arrows();
    std::vector<Term> terms = q.terms();

    auto endpoint = [&](const std::string& id) -> const Arrow& {
        for (const auto& a : arrows)
            if (a.id == id) return a;
        throw SpliceError("unknown arrow '" + id + "'");
    };
    auto holders = [&](const std::string& id, std::size_t skip) {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (t == skip) continue;
            if (std::find(terms[t].word.begin(), terms[t].word.end(), id) != terms[t].word.end()) out.push_back(t);
        }
        return out;
    };
    // Word of term t rotated so that `id` comes first.
    auto rotated = [&](std::size_t t, const std::string& id) {
        std::vector<std::string> w = terms[t].word;
        std::rotate(w.begin(), std::find(w.begin(), w.end(), id), w.end());
        return w;
    };

    for (;;) {
        std::size_t mass = terms.size();
        for (std::size_t t = 0; t < terms.size(); ++t)
            if (terms[t].word.size() == 2) {
                mass = t;
                break;
            }
        if (mass == terms.size()) break;

        const std::string x = terms[mass].word[0];
        const std::string y = terms[mass].word[1];
        if (x == y) throw SpliceError("mass term squares a single arrow");
        const auto tx = holders(x, mass);
        const auto ty = holders(y, mass);
        if (tx.size() != 1 || ty.size() != 1)
            throw SpliceError("mass term " + x + " " + y + " is not paired with exactly one other term per arrow");
        if (tx.front() == ty.front()) throw SpliceError("both mass arrows lie in the same term");

        std::vector<std::string> wx = rotated(tx.front(), x);
        std::vector<std::string> wy = rotated(ty.front(), y);
        std::vector<std::string> complement(wx.begin() + 1, wx.end());
        if (complement.empty()) throw SpliceError("term containing " + x + " has nothing to splice");
        const Arrow& ay = endpoint(y);
        if (endpoint(complement.front()).from != ay.from || endpoint(complement.back()).to != ay.to)
            throw SpliceError("endpoints of the replacement path do not match arrow " + y);
        if (std::count(wx.begin(), wx.end(), x) != 1 || std::count(wy.begin(), wy.end(), y) != 1)
            throw SpliceError("mass arrow repeated inside a term");

        std::vector<std::string> spliced = complement;
        spliced.insert(spliced.end(), wy.begin() + 1, wy.end());
        const Rational value =
            -signed_value(terms[tx.front()]) * signed_value(terms[ty.front()]) / signed_value(terms[mass]);
        terms[ty.front()] = term_from_value(value, std::move(spliced));

        std::vector<std::size_t> drop = {mass, tx.front()};
        std::sort(drop.rbegin(), drop.rend());
        for (auto t : drop) terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(t));
        std::erase_if(arrows, [&](const Arrow& a) { return a.id == x || a.id == y; });
        removed.emplace_back(x, y);
    }
    return Quiver(q.nodes(), std::move(arrows), std::move(terms));
}

Quiver reduce_mass_terms(const Quiver& q) {
    std::vector<std::pair<std::string, std::string>> removed;
    return reduce_mass_terms(q, removed);
}

std::pair<Quiver, MutationRecord> mutate_and_reduce(const Quiver& q, const std::string& v) {
    auto [mutated, record] = seiberg_mutate(q, v);
    Quiver reduced = reduce_mass_terms(mutated, record.removed_pairs);
    record.terms_after = reduced.num_terms();
    return {std::move(reduced), std::move(record)};
}

UrbanRenewal urban_renewal(const CombinatorialMap& m, std::size_t face) {
    if (face >= m.num_faces()) throw PreconditionError("face index out of range");
    const Quiver q = map_to_quiver(m);
    const std::string node = q.nodes()[face];
    auto [dual, record] = mutate_and_reduce(q, node);
    UrbanRenewal out;
    out.map = quiver_to_map(dual);
    out.face = face_for_node(dual, out.map, node);
    out.record = std::move(record);
    return out;
}

namespace {

ToricDiagram support_only(const ToricDiagram& d) {
    ToricDiagram::Points pts;
    for (const auto& [p, mult] : d.points()) pts.emplace(p, 1);
    return ToricDiagram(std::move(pts));
}

}  // namespace

DualityReport check_duality_invariance(const Quiver& q, const Quiver& q2) {
    const ToricDiagram d1 = toric_diagram_of(quiver_to_map(q));
    const ToricDiagram d2 = toric_diagram_of(quiver_to_map(q2));
    DualityReport r;
    r.canonical_first = canonical_polygon(boundary_profile(d1));
    r.canonical_second = canonical_polygon(boundary_profile(d2));
    r.polygons_equal = canonical_polygon(support_only(d1)) == canonical_polygon(support_only(d2));
    r.boundary_equal = r.canonical_first == r.canonical_second;
    return r;
}

}  // namespace tilingforge

#include "tilingforge/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "tilingforge/error.hpp"

namespace tilingforge {

namespace {

template <typename T>
std::vector<T> min_rotation(const std::vector<T>& word) {
    std::vector<T> best = word;
    std::vector<T> rot = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

}  // namespace

std::vector<std::string> canonical_rotation(const std::vector<std::string>& word) {
    return min_rotation(word);
}

bool Term::cyclically_equal(const Term& other) const {
    if (sign != other.sign || coeff != other.coeff || word.size() != other.word.size()) return false;
    return canonical_rotation(word) == canonical_rotation(other.word);
}

Quiver::Quiver(std::vector<std::string> nodes, std::vector<Arrow> arrows, std::vector<Term> terms)
    : nodes_(std::move(nodes)), arrows_(std::move(arrows)), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!node_lookup_.emplace(nodes_[i], i).second)
            throw MalformedError("duplicate node id '" + nodes_[i] + "'");
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!arrow_lookup_.emplace(a.id, i).second)
            throw MalformedError("duplicate arrow id '" + a.id + "'");
        if (!node_lookup_.contains(a.from) || !node_lookup_.contains(a.to))
            throw MalformedError("arrow '" + a.id + "' references an undeclared node");
    }
    for (auto& t : terms_) {
        if (t.sign != 1 && t.sign != -1) throw MalformedError("term sign must be +1 or -1");
        if (t.coeff == 0) throw MalformedError("term coefficient must be nonzero");
        // Fold a negative coefficient into the sign so that coeff > 0.
        if (t.coeff < 0) {
            t.coeff = -t.coeff;
            t.sign = -t.sign;
        }
        if (t.word.empty()) throw MalformedError("empty superpotential term");
        for (const auto& id : t.word) {
            if (!arrow_lookup_.contains(id))
                throw MalformedError("superpotential references unknown arrow '" + id + "'");
        }
    }
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view id) const {
    auto it = arrow_lookup_.find(std::string(id));
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Quiver::node_index(std::string_view id) const {
    auto it = node_lookup_.find(std::string(id));
    if (it == node_lookup_.end()) return std::nullopt;
    return it->second;
}

const Arrow& Quiver::arrow(std::string_view id) const {
    auto idx = arrow_index(id);
    if (!idx) throw MalformedError("unknown arrow '" + std::string(id) + "'");
    return arrows_[*idx];
}

ValidationReport validate_quiver(const Quiver& q) {
    ValidationReport r;
    r.n0 = q.num_nodes();
    r.n1 = q.num_arrows();
    r.n2 = q.num_terms();

    r.cycles = true;
    for (std::size_t t = 0; t < q.terms().size(); ++t) {
        const auto& word = q.terms()[t].word;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Arrow& cur = q.arrow(word[i]);
            const Arrow& next = q.arrow(word[(i + 1) % word.size()]);
            if (cur.to != next.from) {
                r.cycles = false;
                std::ostringstream os;
                os << "term " << t << ": arrow " << cur.id << " ends at " << cur.to << " but "
                   << next.id << " starts at " << next.from;
                r.diagnostics.push_back(os.str());
                break;
            }
        }
    }

    // occurrences[arrow] = list of (term, sign)
    std::vector<std::vector<std::pair<std::size_t, int>>> occurrences(q.num_arrows());
    for (std::size_t t = 0; t < q.terms().size(); ++t) {
        for (const auto& id : q.terms()[t].word)
            occurrences[*q.arrow_index(id)].emplace_back(t, q.terms()[t].sign);
    }
    r.toric = true;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& occ = occurrences[a];
        bool good = occ.size() == 2 && occ[0].first != occ[1].first && occ[0].second == -occ[1].second;
        if (!good) {
            r.toric = false;
            std::ostringstream os;
            os << "arrow " << q.arrows()[a].id << " appears " << occ.size()
               << " time(s); toric condition needs one + and one - occurrence in distinct terms";
            r.diagnostics.push_back(os.str());
        }
    }

    const auto euler = static_cast<long long>(r.n0) - static_cast<long long>(r.n1) +
                       static_cast<long long>(r.n2);
    r.euler = euler == 0;
    if (!r.euler) r.diagnostics.push_back("N0 - N1 + N2 = " + std::to_string(euler) + " (expected 0)");
    return r;
}

std::vector<std::vector<int>> incidence_matrix(const Quiver& q) {
    std::vector<std::vector<int>> d(q.num_nodes(), std::vector<int>(q.num_arrows(), 0));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrows()[a];
        d[*q.node_index(arr.from)][a] -= 1;
        d[*q.node_index(arr.to)][a] += 1;
    }
    return d;
}

namespace {

using TermKey = std::tuple<int, std::string, std::vector<std::size_t>>;

class IsomorphismSearch {
public:
    IsomorphismSearch(const Quiver& a, const Quiver& b) : a_(a), b_(b) {
        const std::size_t n = a.num_arrows();
        arrow_map_.assign(n, npos);
        b_used_.assign(n, false);
        node_map_.assign(a.num_nodes(), npos);
        node_used_.assign(b.num_nodes(), false);

        a_src_.resize(n);
        a_dst_.resize(n);
        b_src_.resize(n);
        b_dst_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            a_src_[i] = *a.node_index(a.arrows()[i].from);
            a_dst_[i] = *a.node_index(a.arrows()[i].to);
            b_src_[i] = *b.node_index(b.arrows()[i].from);
            b_dst_[i] = *b.node_index(b.arrows()[i].to);
        }

        a_words_.resize(a.num_terms());
        terms_of_arrow_.resize(n);
        remaining_.resize(a.num_terms());
        for (std::size_t t = 0; t < a.num_terms(); ++t) {
            std::set<std::size_t> distinct;
            for (const auto& id : a.terms()[t].word) {
                auto idx = *a.arrow_index(id);
                a_words_[t].push_back(idx);
                distinct.insert(idx);
            }
            remaining_[t] = distinct.size();
            for (auto idx : distinct) terms_of_arrow_[idx].push_back(t);
        }
        for (const auto& term : b.terms()) {
            std::vector<std::size_t> w;
            for (const auto& id : term.word) w.push_back(*b.arrow_index(id));
            ++b_terms_[TermKey{term.sign, term.coeff.get_str(), min_rotation(w)}];
        }

        // Visit arrows term by term so that terms complete (and prune) early.
        std::vector<bool> seen(n, false);
        for (const auto& w : a_words_) {
            for (auto idx : w) {
                if (!seen[idx]) {
                    seen[idx] = true;
                    order_.push_back(idx);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i]) order_.push_back(i);
    }

    bool run() { return extend(0); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool bind_node(std::size_t na, std::size_t nb, std::vector<std::size_t>& bound) {
        if (node_map_[na] == npos) {
            if (node_used_[nb]) return false;
            node_map_[na] = nb;
            node_used_[nb] = true;
            bound.push_back(na);
            return true;
        }
        return node_map_[na] == nb;
    }

    void unbind_nodes(const std::vector<std::size_t>& bound) {
        for (auto na : bound) {
            node_used_[node_map_[na]] = false;
            node_map_[na] = npos;
        }
    }

    std::optional<TermKey> image_key(std::size_t t) const {
        std::vector<std::size_t> w;
        for (auto idx : a_words_[t]) w.push_back(arrow_map_[idx]);
        const auto& term = a_.terms()[t];
        return TermKey{term.sign, term.coeff.get_str(), min_rotation(w)};
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const std::size_t x = order_[k];
        const bool loop = a_src_[x] == a_dst_[x];
        for (std::size_t y = 0; y < b_used_.size(); ++y) {
            if (b_used_[y] || (b_src_[y] == b_dst_[y]) != loop) continue;
            std::vector<std::size_t> bound;
            if (!bind_node(a_src_[x], b_src_[y], bound) || !bind_node(a_dst_[x], b_dst_[y], bound)) {
                unbind_nodes(bound);
                continue;
            }
            arrow_map_[x] = y;
            b_used_[y] = true;

            std::vector<TermKey> consumed;
            bool ok = true;
            for (auto t : terms_of_arrow_[x]) {
                if (--remaining_[t] != 0) continue;
                auto key = *image_key(t);
                auto it = b_terms_.find(key);
                if (it == b_terms_.end() || it->second == 0) {
                    ok = false;
                } else {
                    --it->second;
                    consumed.push_back(key);
                }
            }
            if (ok && extend(k + 1)) return true;

            for (const auto& key : consumed) ++b_terms_[key];
            for (auto t : terms_of_arrow_[x]) ++remaining_[t];
            b_used_[y] = false;
            arrow_map_[x] = npos;
            unbind_nodes(bound);
        }
        return false;
    }

    const Quiver& a_;
    const Quiver& b_;
    std::vector<std::size_t> arrow_map_, node_map_;
    std::vector<bool> b_used_, node_used_;
    std::vector<std::size_t> a_src_, a_dst_, b_src_, b_dst_;
    std::vector<std::vector<std::size_t>> a_words_;
    std::vector<std::vector<std::size_t>> terms_of_arrow_;
    std::vector<std::size_t> remaining_;
    std::map<TermKey, std::size_t> b_terms_;
    std::vector<std::size_t> order_;
};

}  // namespace

bool quivers_isomorphic(const Quiver& a, const Quiver& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_arrows() != b.num_arrows() ||
        a.num_terms() != b.num_terms())
        return false;
    std::multiset<std::tuple<int, std::string, std::size_t>> ta, tb;
    for (const auto& t : a.terms()) ta.emplace(t.sign, t.coeff.get_str(), t.word.size());
    for (const auto& t : b.terms()) tb.emplace(t.sign, t.coeff.get_str(), t.word.size());
    if (ta != tb) return false;
    return IsomorphismSearch(a, b).run();
}

}  // namespace tilingforge

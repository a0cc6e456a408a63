#include "qfr/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "qfr/errors.hpp"

namespace qfr {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    if (vertex_count_ < 1) throw PreconditionError("quiver needs at least one vertex");
    std::set<std::string> seen;
    out_.assign(static_cast<std::size_t>(vertex_count_) + 1, {});
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        const Arrow& a = arrows_[k];
        if (a.id.empty()) throw PreconditionError("arrow with empty id");
        if (!seen.insert(a.id).second)
            throw PreconditionError("duplicate arrow id '" + a.id + "'");
        check_vertex(a.tail, "arrow tail");
        check_vertex(a.head, "arrow head");
        out_[static_cast<std::size_t>(a.tail)].push_back(k);
    }
}

void Quiver::check_vertex(int v, const char* who) const {
    if (v < 1 || v > vertex_count_)
        throw PreconditionError(std::string(who) + ": unknown vertex " + std::to_string(v));
}

const Arrow& Quiver::arrow(const std::string& id) const {
    for (const Arrow& a : arrows_)
        if (a.id == id) return a;
    throw PreconditionError("unknown arrow id '" + id + "'");
}

bool Quiver::has_arrow(const std::string& id) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [&](const Arrow& a) { return a.id == id; });
}

const std::vector<std::size_t>& Quiver::out_arrows(int vertex) const {
    check_vertex(vertex, "out_arrows");
    return out_[static_cast<std::size_t>(vertex)];
}

std::vector<std::vector<int>> Quiver::connected_components() const {
    std::vector<int> comp(static_cast<std::size_t>(vertex_count_) + 1, 0);
    int next = 0;
    for (int start = 1; start <= vertex_count_; ++start) {
        if (comp[static_cast<std::size_t>(start)] != 0) continue;
        ++next;
        std::deque<int> work{start};
        comp[static_cast<std::size_t>(start)] = next;
        while (!work.empty()) {
            const int v = work.front();
            work.pop_front();
            for (const Arrow& a : arrows_) {
                int other = -1;
                if (a.tail == v) other = a.head;
                else if (a.head == v) other = a.tail;
                else continue;
                if (comp[static_cast<std::size_t>(other)] == 0) {
                    comp[static_cast<std::size_t>(other)] = next;
                    work.push_back(other);
                }
            }
        }
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(next));
    for (int v = 1; v <= vertex_count_; ++v)
        groups[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]) - 1].push_back(v);
    return groups;
}

bool Quiver::is_connected() const { return connected_components().size() == 1; }

std::optional<int> distance(const Quiver& q, int i, int j) {
    q.check_vertex(i, "distance");
    q.check_vertex(j, "distance");
    if (i == j) return 0;
    std::vector<int> dist(static_cast<std::size_t>(q.vertex_count()) + 1, -1);
    std::deque<int> work{i};
    dist[static_cast<std::size_t>(i)] = 0;
    while (!work.empty()) {
        const int v = work.front();
        work.pop_front();
        for (std::size_t k : q.out_arrows(v)) {
            const int h = q.arrows()[k].head;
            if (dist[static_cast<std::size_t>(h)] < 0) {
                dist[static_cast<std::size_t>(h)] = dist[static_cast<std::size_t>(v)] + 1;
                if (h == j) return dist[static_cast<std::size_t>(h)];
                work.push_back(h);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Does the word acquire a square ww ending at its last letter? Checking only
// suffixes is enough when the prefix was already square-free.
bool suffix_square(const std::vector<std::size_t>& word) {
    const std::size_t n = word.size();
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        bool eq = true;
        for (std::size_t t = 0; t < half; ++t) {
            if (word[n - 1 - t] != word[n - 1 - half - t]) {
                eq = false;
                break;
            }
        }
        if (eq) return true;
    }
    return false;
}

} // namespace

bool is_reduced_path(const Quiver& q, const Path& p) {
    if (p.arrow_ids.empty()) throw PreconditionError("path must be nonempty");
    std::vector<std::size_t> word;
    int at = -1;
    bool square_free = true;
    for (const std::string& id : p.arrow_ids) {
        std::size_t idx = q.arrows().size();
        for (std::size_t k = 0; k < q.arrows().size(); ++k)
            if (q.arrows()[k].id == id) idx = k;
        if (idx == q.arrows().size())
            throw PreconditionError("unknown arrow id '" + id + "'");
        const Arrow& a = q.arrows()[idx];
        if (at >= 0 && a.tail != at)
            throw PreconditionError("path is not composable at arrow '" + id + "'");
        at = a.head;
        word.push_back(idx);
        if (suffix_square(word)) square_free = false;
    }
    return square_free;
}

namespace {

struct PathwaySearch {
    const Quiver& q;
    int target;
    long cap;
    int max_len;
    long count = 0;
    bool truncated = false;
    bool want_paths = false;
    std::vector<Path> found = {};
    std::vector<std::size_t> word = {};

    // Returns false once the cap is reached and enumeration must stop.
    bool visit(int at) {
        if (count >= cap) return false;
        if (static_cast<int>(word.size()) == max_len) {
            // Length bound hit: report truncation iff some square-free
            // extension was cut off.
            for (std::size_t k : q.out_arrows(at)) {
                word.push_back(k);
                const bool ok = !suffix_square(word);
                word.pop_back();
                if (ok) {
                    truncated = true;
                    break;
                }
            }
            return true;
        }
        for (std::size_t k : q.out_arrows(at)) {
            word.push_back(k);
            if (!suffix_square(word)) {
                if (q.arrows()[k].head == target) {
                    ++count;
                    if (want_paths) {
                        Path p;
                        for (std::size_t w : word) p.arrow_ids.push_back(q.arrows()[w].id);
                        found.push_back(std::move(p));
                    }
                    if (count >= cap) {
                        word.pop_back();
                        return false;
                    }
                }
                if (!visit(q.arrows()[k].head)) {
                    word.pop_back();
                    return false;
                }
            }
            word.pop_back();
        }
        return true;
    }
};

} // namespace

PathwayCount count_pathways(const Quiver& q, int i, int j, long cap, int max_len) {
    q.check_vertex(i, "count_pathways");
    q.check_vertex(j, "count_pathways");
    if (cap < 1 || max_len < 1) throw PreconditionError("count_pathways: cap and max_len must be >= 1");
    PathwaySearch search{q, j, cap, max_len};
    search.visit(i);
    return {search.count, search.truncated};
}

std::vector<Path> enumerate_pathways(const Quiver& q, int i, int j, long cap, int max_len,
                                     bool* truncated) {
    q.check_vertex(i, "enumerate_pathways");
    q.check_vertex(j, "enumerate_pathways");
    if (cap < 1 || max_len < 1) throw PreconditionError("enumerate_pathways: cap and max_len must be >= 1");
    PathwaySearch search{q, j, cap, max_len};
    search.want_paths = true;
    search.visit(i);
    if (truncated) *truncated = search.truncated;
    return search.found;
}

bool has_loop(const Quiver& q) {
    return std::any_of(q.arrows().begin(), q.arrows().end(),
                       [](const Arrow& a) { return a.is_loop(); });
}

namespace {

void simple_path_dfs(const Quiver& q, int at, int target, std::vector<bool>& used, long& count) {
    for (std::size_t k : q.out_arrows(at)) {
        const int h = q.arrows()[k].head;
        if (h == target) {
            ++count;
            continue;  // cannot extend past the target without repeating it
        }
        if (!used[static_cast<std::size_t>(h)]) {
            used[static_cast<std::size_t>(h)] = true;
            simple_path_dfs(q, h, target, used, count);
            used[static_cast<std::size_t>(h)] = false;
        }
    }
}

} // namespace

long count_simple_paths(const Quiver& q, int i, int j) {
    q.check_vertex(i, "count_simple_paths");
    q.check_vertex(j, "count_simple_paths");
    if (i == j) return 0;
    std::vector<bool> used(static_cast<std::size_t>(q.vertex_count()) + 1, false);
    used[static_cast<std::size_t>(i)] = true;
    long count = 0;
    simple_path_dfs(q, i, j, used, count);
    return count;
}

std::vector<KroneckerPair> detect_local_path_kronecker(const Quiver& q, int k_min) {
    if (k_min < 2) throw PreconditionError("detect_local_path_kronecker: k_min must be >= 2");
    std::vector<KroneckerPair> pairs;
    for (int i = 1; i <= q.vertex_count(); ++i) {
        for (int j = i + 1; j <= q.vertex_count(); ++j) {
            const long m = count_simple_paths(q, i, j);
            const long n = count_simple_paths(q, j, i);
            if (m + n >= k_min) pairs.push_back({i, j, m, n});
        }
    }
    return pairs;
}

std::optional<int> is_one_step_star_shaped(const Quiver& q) {
    if (q.arrows().empty()) return std::nullopt;
    if (has_loop(q)) return std::nullopt;
    // One arrow per leaf plus the center fixes the vertex count.
    if (q.vertex_count() != static_cast<int>(q.arrows().size()) + 1) return std::nullopt;

    for (int center = 1; center <= q.vertex_count(); ++center) {
        bool ok = true;
        std::vector<int> leaf_arrows(static_cast<std::size_t>(q.vertex_count()) + 1, 0);
        for (const Arrow& a : q.arrows()) {
            const int leaf = (a.tail == center) ? a.head : (a.head == center ? a.tail : -1);
            if (leaf < 0 || leaf == center) {
                ok = false;  // arrow not incident to the candidate center
                break;
            }
            ++leaf_arrows[static_cast<std::size_t>(leaf)];
        }
        if (!ok) continue;
        for (int v = 1; v <= q.vertex_count() && ok; ++v) {
            if (v == center) continue;
            if (leaf_arrows[static_cast<std::size_t>(v)] != 1) ok = false;
        }
        if (ok) return center;
    }
    return std::nullopt;
}

std::string route_name(Route r) {
    switch (r) {
        case Route::TrivialStabilizer: return "trivial-stabilizer";
        case Route::CartanDiagonal: return "cartan-diagonal";
        case Route::Undetermined: return "undetermined";
    }
    return "undetermined";
}

int ClassificationCaps::effective_max_len(const Quiver& q) const {
    if (max_len > 0) return max_len;
    return std::max<int>(8, 3 * static_cast<int>(q.arrows().size()));
}

namespace {

ClassificationReport classify_connected(const Quiver& q, const ClassificationCaps& caps) {
    ClassificationReport rep;
    rep.has_loop = has_loop(q);
    rep.kronecker_pairs = detect_local_path_kronecker(q, 2);
    if (auto center = is_one_step_star_shaped(q)) rep.one_step_star_centers.push_back(*center);

    if (q.arrows().empty()) {
        rep.warnings.push_back("quiver has no arrows; nothing to classify");
        rep.route = Route::Undetermined;
        return rep;
    }

    if (rep.has_loop || !rep.kronecker_pairs.empty()) {
        rep.route = Route::TrivialStabilizer;
        // The two-pathway flag is still reported for information.
    }

    const int max_len = caps.effective_max_len(q);
    const long cap = std::max<long>(caps.cap, 3);
    bool all_le_two = true;
    bool truncated_somewhere = false;
    for (int i = 1; i <= q.vertex_count(); ++i) {
        for (int j = i + 1; j <= q.vertex_count(); ++j) {
            const PathwayCount f = count_pathways(q, i, j, cap, max_len);
            const PathwayCount b = count_pathways(q, j, i, cap, max_len);
            if (f.count + b.count > 2) all_le_two = false;
            truncated_somewhere = truncated_somewhere || f.truncated || b.truncated;
        }
    }
    rep.truncation_warning = truncated_somewhere;
    rep.at_most_two_pathways = all_le_two && !truncated_somewhere;

    if (rep.route != Route::TrivialStabilizer) {
        if (truncated_somewhere) {
            rep.route = Route::Undetermined;
            rep.warnings.push_back("pathway enumeration hit the length bound; raise max_len");
        } else if (all_le_two) {
            rep.route = Route::CartanDiagonal;
        } else {
            // Cannot happen for a quiver without loops or Kronecker pairs:
            // three pathways between two vertices force one of those.
            rep.route = Route::Undetermined;
            rep.warnings.push_back("more than two pathways but no loop/Kronecker pair detected");
        }
    }
    return rep;
}

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& vertices,
                         std::vector<int>& back_map) {
    std::map<int, int> relabel;
    back_map.clear();
    for (int v : vertices) {
        relabel[v] = static_cast<int>(relabel.size()) + 1;
        back_map.push_back(v);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) {
        auto t = relabel.find(a.tail);
        auto h = relabel.find(a.head);
        if (t != relabel.end() && h != relabel.end())
            arrows.push_back({a.id, t->second, h->second});
    }
    return Quiver(static_cast<int>(vertices.size()), std::move(arrows));
}

} // namespace

ClassificationReport classify(const Quiver& q, const ClassificationCaps& caps) {
    const auto components = q.connected_components();
    if (components.size() == 1) return classify_connected(q, caps);

    ClassificationReport rep;
    rep.warnings.push_back("quiver is disconnected; classifying each component separately");
    rep.route = Route::Undetermined;
    rep.has_loop = has_loop(q);
    for (const auto& comp : components) {
        std::vector<int> back;
        const Quiver sub = induced_subquiver(q, comp, back);
        rep.component_vertices.push_back(comp);
        rep.components.push_back(classify_connected(sub, caps));
    }
    return rep;
}

Quiver jordan_quiver(int loops) {
    std::vector<Arrow> arrows;
    for (int k = 1; k <= loops; ++k) arrows.push_back({"c" + std::to_string(k), 1, 1});
    return Quiver(1, std::move(arrows));
}

Quiver a2_quiver() { return Quiver(2, {{"a", 1, 2}}); }

Quiver kronecker_quiver(int count) {
    std::vector<Arrow> arrows;
    for (int k = 1; k <= count; ++k) arrows.push_back({"a" + std::to_string(k), 1, 2});
    return Quiver(2, std::move(arrows));
}

Quiver mixed_kronecker_quiver() { return Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}); }

Quiver star_quiver_one_step(int legs_in, int legs_out) {
    if (legs_in < 0 || legs_out < 0 || legs_in + legs_out < 1)
        throw PreconditionError("star quiver needs at least one leg");
    std::vector<Arrow> arrows;
    int leaf = 2;
    for (int k = 1; k <= legs_in; ++k, ++leaf)
        arrows.push_back({"in" + std::to_string(k), leaf, 1});
    for (int k = 1; k <= legs_out; ++k, ++leaf)
        arrows.push_back({"out" + std::to_string(k), 1, leaf});
    return Quiver(legs_in + legs_out + 1, std::move(arrows));
}

Quiver two_route_square_quiver() {
    return Quiver(4, {{"a", 1, 2}, {"b", 2, 3}, {"c", 1, 4}, {"d", 4, 3}});
}

} // namespace qfr

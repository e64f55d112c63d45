// SPDX-License-Identifier: Apache-2.0
#include "locapprox/interpret.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace locapprox {

namespace {

int ball_radius(const LocalBall& b) { return b.depth.empty() ? 0 : *std::max_element(b.depth.begin(), b.depth.end()); }

std::string rerooted_id(const LocalBall& b, int v, int radius) {
    return canonical_ball_id(ball_in(b.colors, b.adj, v, radius));
}

// Pointed id of the r-ball around `center` inside `b`, pointing at `target`.
std::string local_pointed(const LocalBall& b, int center, int target, int radius) {
    LocalBall sub = ball_in(b.colors, b.adj, center, radius);
    auto it = std::find(sub.global.begin(), sub.global.end(), target);
    return pointed_ball_id(sub, static_cast<int>(it - sub.global.begin()));
}

const LegendEntry* legend_of(const ColorRule& rule, int color) {
    auto it = rule.legend.find(color);
    return it == rule.legend.end() ? nullptr : &it->second;
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

}  // namespace

SchemeValidation validate_scheme(const InterpretationScheme& s) {
    SchemeValidation out;
    auto violation = [&](std::string msg) { out.violations.push_back(std::move(msg)); };
    if (s.r < 1) violation("radius r must be >= 1");

    if (const auto* rule = std::get_if<TypePairRule>(&s.rule)) {
        for (const auto& id : s.xi) {
            try {
                if (ball_radius(ball_representative(id)) > s.r) violation("xi type " + id + " has radius above r");
            } catch (const ValidationError& e) {
                violation(std::string("xi: ") + e.what());
            }
        }
        std::set<std::string> forward;
        std::vector<std::pair<PointedType, std::string>> swapped;
        for (const auto& p : rule->pairs) {
            LocalBall rep;
            try {
                rep = ball_representative(p.ball_id);
            } catch (const ValidationError& e) {
                violation(std::string("eta: ") + e.what());
                continue;
            }
            const std::string tag = "eta (" + p.ball_id + ", " + std::to_string(p.z) + ")";
            if (ball_radius(rep) > 2 * s.r) violation(tag + ": type radius exceeds 2r");
            if (p.z < 0 || p.z >= static_cast<int>(rep.size())) {
                violation(tag + ": vertex index out of range");
                continue;
            }
            if (p.z == 0) {
                violation(tag + ": z is the root (anti-reflexivity)");
                continue;
            }
            if (rep.depth[p.z] > s.r) {
                violation(tag + ": z lies farther than r from the root");
                continue;
            }
            if (!s.xi.count(rerooted_id(rep, 0, s.r))) violation(tag + ": root r-ball not in xi (guardedness)");
            if (!s.xi.count(rerooted_id(rep, p.z, s.r))) violation(tag + ": z r-ball not in xi (guardedness)");
            forward.insert(local_pointed(rep, 0, p.z, s.r));
            swapped.emplace_back(p, local_pointed(rep, p.z, 0, s.r));
        }
        for (const auto& [p, key] : swapped)
            if (!forward.count(key))
                violation("eta (" + p.ball_id + ", " + std::to_string(p.z) + "): no swapped counterpart (symmetry)");
        for (const auto& m : s.marks)
            for (const auto& id : m.ball_ids)
                if (!s.xi.count(id)) violation("mark " + m.name + " type " + id + " not in xi");
    } else {
        const auto& colors = std::get<ColorRule>(s.rule);
        for (const auto& [id, e] : colors.legend) {
            if (e.rainbow < 1 || e.base < 1) violation("legend " + std::to_string(id) + ": colors must be >= 1");
            if (!std::is_sorted(e.neighbors.begin(), e.neighbors.end()))
                violation("legend " + std::to_string(id) + ": neighbor set not sorted");
            if (s.output_colors && e.xi && e.base > *s.output_colors)
                violation("legend " + std::to_string(id) + ": base color above declared output colors");
        }
        for (const auto& m : s.marks)
            for (int c : m.colors) {
                const auto* e = legend_of(colors, c);
                if (!e || !e->xi) violation("mark " + m.name + " color " + std::to_string(c) + " not in xi");
            }
    }
    return out;
}

Interpreted apply_scheme_mapped(const InterpretationScheme& s, const ColoredGraph& g) {
    auto check = validate_scheme(s);
    if (!check.ok()) throw ValidationError("invalid scheme: " + check.violations.front());
    const int n = static_cast<int>(g.size());
    std::vector<char> in_domain(n, 0);
    std::vector<std::set<int>> out_adj(n);
    std::vector<std::vector<std::string>> vertex_marks(n);
    BallExtractor ex(g);

    if (const auto* rule = std::get_if<TypePairRule>(&s.rule)) {
        std::set<std::string> wanted_balls, wanted_pointed;
        for (const auto& p : rule->pairs) {
            LocalBall rep = ball_representative(p.ball_id);
            wanted_balls.insert(canonical_ball_id(rep));
            wanted_pointed.insert(pointed_ball_id(rep, p.z));
        }
        std::vector<std::string> rball(n);
        for (int x = 0; x < n; ++x) {
            rball[x] = ex.extract(x, s.r).id;
            in_domain[x] = s.xi.count(rball[x]) ? 1 : 0;
        }
        for (int x = 0; x < n; ++x) {
            if (!in_domain[x]) continue;
            LocalBall b = ex.local(x, 2 * s.r);
            if (!wanted_balls.count(canonical_ball_id(b))) continue;
            for (int y = 1; y < static_cast<int>(b.size()); ++y)
                if (b.depth[y] <= s.r && wanted_pointed.count(pointed_ball_id(b, y))) out_adj[x].insert(b.global[y]);
        }
        for (int x = 0; x < n; ++x)
            if (in_domain[x])
                for (const auto& m : s.marks)
                    if (m.ball_ids.count(rball[x])) vertex_marks[x].push_back(m.name);
    } else {
        const auto& colors = std::get<ColorRule>(s.rule);
        BoundedBfs bfs(g);
        for (int x = 0; x < n; ++x) {
            const auto* e = legend_of(colors, g.colors[x]);
            in_domain[x] = e && e->xi;
        }
        for (int x = 0; x < n; ++x) {
            if (!in_domain[x]) continue;
            const auto* lx = legend_of(colors, g.colors[x]);
            if (lx->neighbors.empty()) continue;
            for (int y : bfs.run(x, s.r)) {
                if (y == x || !in_domain[y]) continue;
                const auto* ly = legend_of(colors, g.colors[y]);
                if (contains(lx->neighbors, ly->rainbow) && contains(ly->neighbors, lx->rainbow)) out_adj[x].insert(y);
            }
        }
        for (int x = 0; x < n; ++x)
            if (in_domain[x])
                for (const auto& m : s.marks)
                    if (m.colors.count(g.colors[x])) vertex_marks[x].push_back(m.name);
    }

    for (int x = 0; x < n; ++x)
        for (int y : out_adj[x]) {
            if (y == x) throw SchemeError("edge relation is not anti-reflexive at vertex " + std::to_string(x));
            if (!in_domain[y])
                throw SchemeError("edge {" + std::to_string(x) + "," + std::to_string(y) + "} leaves the domain");
            if (!out_adj[y].count(x))
                throw SchemeError("edge relation is not symmetric: " + std::to_string(x) + " -> " + std::to_string(y));
        }

    Interpreted out;
    std::vector<int> index(n, -1);
    for (int x = 0; x < n; ++x)
        if (in_domain[x]) {
            index[x] = static_cast<int>(out.source.size());
            out.source.push_back(x);
        }
    ColoredGraph& h = out.graph;
    h.params = g.params;
    const bool recolor = !s.is_type_pair();
    int top_color = 1;
    for (int x : out.source) {
        int color = recolor ? legend_of(std::get<ColorRule>(s.rule), g.colors[x])->base : g.colors[x];
        top_color = std::max(top_color, color);
        h.colors.push_back(color);
        std::vector<int> nb;
        for (int y : out_adj[x]) nb.push_back(index[y]);
        h.adj.push_back(std::move(nb));
    }
    if (!s.marks.empty()) {
        h.marks.reserve(out.source.size());
        for (int x : out.source) {
            auto m = vertex_marks[x];
            std::sort(m.begin(), m.end());
            h.marks.push_back(std::move(m));
        }
    }
    h.params.c = s.output_colors.value_or(recolor ? top_color : g.params.c);
    const int realized = h.max_degree();
    if (s.output_degree) {
        if (realized > *s.output_degree)
            throw ValidationError("interpreted graph has degree " + std::to_string(realized) +
                                  " above declared bound " + std::to_string(*s.output_degree));
        h.params.d = *s.output_degree;
    } else {
        h.params.d = std::max(1, realized);
    }
    if (top_color > h.params.c)
        throw ValidationError("interpreted color " + std::to_string(top_color) + " above declared output colors");
    return out;
}

ColoredGraph apply_scheme(const InterpretationScheme& s, const ColoredGraph& g) {
    return apply_scheme_mapped(s, g).graph;
}

std::string format_legend_line(int id, const LegendEntry& e) {
    std::string out = "legend " + std::to_string(id) + " = (" + std::to_string(e.rainbow) + ", {";
    for (std::size_t i = 0; i < e.neighbors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.neighbors[i]);
    }
    out += "}) xi=" + std::string(e.xi ? "1" : "0") + " base=" + std::to_string(e.base);
    return out;
}

namespace {

// legend <id> = (<rainbow>, {<a>,<b>}) [xi=<0|1>] [base=<c>]
std::pair<int, LegendEntry> parse_legend_line(std::string_view line, std::size_t lineno) {
    auto fail = [&](const std::string& why) -> std::pair<int, LegendEntry> { throw ParseError(lineno, why); };
    auto rest = line.substr(std::string_view("legend").size());
    auto eq = rest.find('=');
    auto open = rest.find('(');
    auto close = rest.find(')');
    if (eq == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
        !(eq < open && open < close))
        return fail("expected 'legend <int> = (<color>, {<color>,...})'");
    auto id_tok = detail::tokenize(rest.substr(0, eq));
    if (id_tok.size() != 1) return fail("legend needs one integer id");
    int id = detail::parse_int(id_tok[0], lineno);
    auto inner = rest.substr(open + 1, close - open - 1);
    auto comma = inner.find(',');
    auto lbrace = inner.find('{');
    auto rbrace = inner.find('}');
    if (comma == std::string_view::npos || lbrace == std::string_view::npos || rbrace == std::string_view::npos)
        return fail("legend tuple must be (<color>, {...})");
    LegendEntry e;
    auto rb = detail::tokenize(inner.substr(0, comma));
    if (rb.size() != 1) return fail("legend tuple must start with one color");
    e.rainbow = detail::parse_int(rb[0], lineno);
    auto set_text = inner.substr(lbrace + 1, rbrace - lbrace - 1);
    for (auto part : detail::split(set_text, ',')) {
        auto tok = detail::tokenize(part);
        if (tok.empty()) continue;
        if (tok.size() != 1) return fail("malformed neighbor color set");
        e.neighbors.push_back(detail::parse_int(tok[0], lineno));
    }
    std::sort(e.neighbors.begin(), e.neighbors.end());
    e.neighbors.erase(std::unique(e.neighbors.begin(), e.neighbors.end()), e.neighbors.end());
    auto kv = detail::parse_kv(detail::tokenize(rest.substr(close + 1)), 0, lineno);
    for (const auto& [key, value] : kv) {
        if (key == "xi") e.xi = detail::parse_int(value, lineno) != 0;
        else if (key == "base") e.base = detail::parse_int(value, lineno);
        else return fail("unknown legend attribute '" + key + "'");
    }
    return {id, e};
}

LocalBall catalog_ball(const ColoredGraph& g) {
    if (g.size() == 0) throw ValidationError("empty catalog ball");
    std::vector<int> colors = g.colors;
    LocalBall b = ball_in(colors, g.adj, 0, static_cast<int>(g.size()));
    if (b.size() != g.size()) throw ValidationError("catalog ball is not connected");
    return b;
}

}  // namespace

InterpretationScheme parse_scheme(std::string_view text) {
    InterpretationScheme s;
    bool have_header = false;
    bool type_pair = true;
    std::map<int, std::string> catalog_text;
    std::map<int, std::size_t> catalog_line;
    int open_ball = -1;
    std::string block;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> records;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view raw = text.substr(start, end - start);
        std::string_view line = raw.substr(0, raw.find('#'));
        auto tok = detail::tokenize(line);
        if (open_ball >= 0) {
            if (!tok.empty() && tok[0] == "end") {
                catalog_text[open_ball] = block;
                open_ball = -1;
            } else {
                block.append(raw);
                block.push_back('\n');
            }
        } else if (!tok.empty()) {
            if (!have_header) {
                if (tok[0] != "scheme") throw ParseError(lineno, "expected 'scheme r=<int> form=<typepair|colorrule>'");
                auto kv = detail::parse_kv(tok, 1, lineno);
                s.r = detail::require_int(kv, "r", lineno);
                auto form = kv.find("form");
                if (form == kv.end()) throw ParseError(lineno, "missing 'form='");
                if (form->second == "typepair") type_pair = true;
                else if (form->second == "colorrule") type_pair = false;
                else throw ParseError(lineno, "unknown form '" + form->second + "'");
                if (kv.count("dout")) s.output_degree = detail::require_int(kv, "dout", lineno);
                if (kv.count("cout")) s.output_colors = detail::require_int(kv, "cout", lineno);
                have_header = true;
            } else if (tok[0] == "ball") {
                if (tok.size() != 2) throw ParseError(lineno, "expected 'ball <int>'");
                open_ball = detail::parse_int(tok[1], lineno);
                if (catalog_text.count(open_ball)) throw ParseError(lineno, "duplicate ball id");
                catalog_line[open_ball] = lineno;
                block.clear();
            } else if (tok[0] == "legend") {
                if (type_pair) throw ParseError(lineno, "legend lines belong to form=colorrule");
                auto [id, e] = parse_legend_line(line, lineno);
                if (!std::get_if<ColorRule>(&s.rule)) s.rule = ColorRule{};
                if (!std::get<ColorRule>(s.rule).legend.emplace(id, e).second)
                    throw ParseError(lineno, "duplicate legend id");
            } else {
                std::vector<std::string> owned(tok.begin(), tok.end());
                records.emplace_back(std::move(owned), lineno);
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (!have_header) throw ParseError(1, "missing 'scheme' header");
    if (open_ball >= 0) throw ParseError(catalog_line[open_ball], "unterminated ball block");
    if (!type_pair && !std::get_if<ColorRule>(&s.rule)) s.rule = ColorRule{};

    std::map<int, LocalBall> catalog;
    for (const auto& [id, body] : catalog_text) {
        try {
            catalog[id] = catalog_ball(parse_graph(body));
        } catch (const ParseError& e) {
            throw ParseError(catalog_line[id] + e.line(), e.what());
        } catch (const ValidationError& e) {
            throw ParseError(catalog_line[id], e.what());
        }
    }
    auto ball = [&](const std::string& tok, std::size_t ln) -> const LocalBall& {
        auto it = catalog.find(detail::parse_int(tok, ln));
        if (it == catalog.end()) throw ParseError(ln, "unknown ball id " + tok);
        return it->second;
    };

    TypePairRule pairs;
    std::map<std::string, std::size_t> mark_index;
    for (const auto& [tok, ln] : records) {
        if (tok[0] == "xi") {
            if (!type_pair) throw ParseError(ln, "xi lines belong to form=typepair");
            if (tok.size() != 2) throw ParseError(ln, "expected 'xi <ball-id>'");
            s.xi.insert(canonical_ball_id(ball(tok[1], ln)));
        } else if (tok[0] == "eta") {
            if (!type_pair) throw ParseError(ln, "eta lines belong to form=typepair");
            if (tok.size() != 3) throw ParseError(ln, "expected 'eta <ball-id> <vertex-index>'");
            const LocalBall& b = ball(tok[1], ln);
            int z = detail::parse_int(tok[2], ln);
            if (z < 0 || z >= static_cast<int>(b.size())) throw ParseError(ln, "vertex index out of range");
            // translate the stored numbering onto the canonical representative
            std::string id = canonical_ball_id(b);
            LocalBall rep = ball_representative(id);
            std::string key = pointed_ball_id(b, static_cast<int>(std::find(b.global.begin(), b.global.end(), z) -
                                                                  b.global.begin()));
            int mapped = -1;
            for (int w = 0; w < static_cast<int>(rep.size()) && mapped < 0; ++w)
                if (pointed_ball_id(rep, w) == key) mapped = w;
            pairs.pairs.insert(PointedType{id, mapped});
        } else if (tok[0] == "mu") {
            if (tok.size() != 3) throw ParseError(ln, "expected 'mu <name> <ball-id|color>'");
            auto [it, inserted] = mark_index.emplace(tok[1], s.marks.size());
            if (inserted) s.marks.push_back(SchemeMark{tok[1], {}, {}});
            auto& m = s.marks[it->second];
            if (type_pair) m.ball_ids.insert(canonical_ball_id(ball(tok[2], ln)));
            else m.colors.insert(detail::parse_int(tok[2], ln));
        } else {
            throw ParseError(ln, "unknown record '" + tok[0] + "'");
        }
    }
    if (type_pair) s.rule = std::move(pairs);
    return s;
}

InterpretationScheme read_scheme_file(const std::filesystem::path& path) { return parse_scheme(detail::slurp(path)); }

std::string write_scheme(const InterpretationScheme& s) {
    std::ostringstream out;
    out << "scheme r=" << s.r << " form=" << (s.is_type_pair() ? "typepair" : "colorrule");
    if (s.output_degree) out << " dout=" << *s.output_degree;
    if (s.output_colors) out << " cout=" << *s.output_colors;
    out << '\n';
    if (const auto* rule = std::get_if<TypePairRule>(&s.rule)) {
        std::map<std::string, int> ids;
        auto id_of = [&](const std::string& ball) {
            auto [it, inserted] = ids.emplace(ball, static_cast<int>(ids.size()));
            return it->second;
        };
        for (const auto& x : s.xi) id_of(x);
        for (const auto& p : rule->pairs) id_of(p.ball_id);
        for (const auto& m : s.marks)
            for (const auto& b : m.ball_ids) id_of(b);
        std::vector<std::string> by_id(ids.size());
        for (const auto& [ball, id] : ids) by_id[id] = ball;
        for (std::size_t i = 0; i < by_id.size(); ++i) {
            LocalBall rep = ball_representative(by_id[i]);
            ColoredGraph g;
            g.colors = rep.colors;
            g.adj = rep.adj;
            for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
            g.params.d = std::max(1, g.max_degree());
            g.params.c = std::max(1, *std::max_element(rep.colors.begin(), rep.colors.end()));
            out << "ball " << i << '\n' << write_graph(g) << "end\n";
        }
        for (const auto& x : s.xi) out << "xi " << ids[x] << '\n';
        for (const auto& p : rule->pairs) out << "eta " << ids[p.ball_id] << ' ' << p.z << '\n';
        for (const auto& m : s.marks)
            for (const auto& b : m.ball_ids) out << "mu " << m.name << ' ' << ids[b] << '\n';
    } else {
        for (const auto& [id, e] : std::get<ColorRule>(s.rule).legend) out << format_legend_line(id, e) << '\n';
        for (const auto& m : s.marks)
            for (int c : m.colors) out << "mu " << m.name << ' ' << c << '\n';
    }
    return out.str();
}

InterpretationScheme color_rule_scheme(const std::map<int, LegendEntry>& legend, int r, int out_d, int out_c) {
    InterpretationScheme s;
    s.r = r;
    s.rule = ColorRule{legend};
    s.output_degree = out_d;
    s.output_colors = out_c;
    return s;
}

CompositeSource composite_source(const ColoredGraph& target, const ColoredGraph& forest, int k) {
    target.validate();
    forest.validate();
    if (k < 0) throw ValidationError("k must be >= 0");
    if (target.size() > forest.size())
        throw ValidationError("forest has fewer vertices than the target");
    if (girth(forest)) throw ValidationError("T is not acyclic");
    auto comp = components(forest);
    BoundedBfs bfs(forest);
    int r = 1;
    const int nt = static_cast<int>(target.size());
    for (int x = 0; x < nt; ++x)
        for (int y : target.adj[x]) {
            if (y < x) continue;
            if (comp[x] != comp[y])
                throw ValidationError("target edge {" + std::to_string(x) + "," + std::to_string(y) +
                                      "} crosses components of T");
            bfs.run(x, static_cast<int>(forest.size()));
            r = std::max(r, bfs.distance(y));
        }
    CompositeSource out;
    out.r = r;
    out.rainbow_radius = std::max(r, 2 * k);
    ColoredGraph rainbow = rainbow_color(forest, out.rainbow_radius);
    out.rainbow_colors = rainbow.params.c;

    std::vector<LegendEntry> entry(forest.size());
    for (int x = 0; x < static_cast<int>(forest.size()); ++x) {
        LegendEntry& e = entry[x];
        e.rainbow = rainbow.colors[x];
        e.xi = x < nt;
        e.base = x < nt ? target.colors[x] : 1;
        if (x < nt)
            for (int y : target.adj[x]) e.neighbors.push_back(rainbow.colors[y]);
        std::sort(e.neighbors.begin(), e.neighbors.end());
    }
    std::map<LegendEntry, int> ids;
    for (const auto& e : entry) ids.emplace(e, 0);
    int next = 0;
    for (auto& [e, id] : ids) {
        id = ++next;
        out.legend.emplace(id, e);
    }
    out.graph = forest;
    out.graph.marks.clear();
    out.graph.intended_type.clear();
    out.graph.original_color.clear();
    out.graph.params.c = std::max(1, next);
    for (int x = 0; x < static_cast<int>(forest.size()); ++x) out.graph.colors[x] = ids[entry[x]];
    return out;
}

PipelineReport pipeline(const ColoredGraph& target, const ColoredGraph& forest, const PipelineOptions& opt) {
    CompositeSource src = composite_source(target, forest, opt.k);
    PipelineReport rep;
    rep.k = opt.k;
    rep.seed = opt.seed;
    rep.r = src.r;
    rep.rainbow_radius = src.rainbow_radius;
    rep.rainbow_colors = src.rainbow_colors;
    rep.legend = src.legend;
    rep.R_max = (opt.k - 2 * src.r) / src.r > 0 ? (opt.k - 2 * src.r) / src.r : 1;

    InterpretationScheme scheme = color_rule_scheme(src.legend, src.r, target.params.d, target.params.c);

    Interpreted at_source = apply_scheme_mapped(scheme, src.graph);
    bool exact = at_source.source.size() == target.size();
    for (std::size_t i = 0; exact && i < at_source.source.size(); ++i) {
        int x = at_source.source[i];
        std::vector<int> got;
        for (int y : at_source.graph.adj[i]) got.push_back(at_source.source[y]);
        exact = x == static_cast<int>(i) && got == target.adj[x] && at_source.graph.colors[i] == target.colors[x];
    }
    rep.source_reconstruction_exact = exact;

    rep.q = from_graph(src.graph, opt.k);
    for (long long n : opt.n_list) {
        PipelineStage stage;
        stage.n = n;
        SynthesisOptions so;
        so.seed = opt.seed;
        so.epsilon = opt.epsilon;
        auto [h, srep] = synthesize(rep.q, n, so);
        stage.synthesis = std::move(srep);
        ColoredGraph gn = apply_scheme(scheme, h);
        stage.interpreted_size = static_cast<long long>(gn.size());
        stage.interpreted_edges = static_cast<long long>(gn.edge_count());
        for (int R = 1; R <= rep.R_max; ++R) stage.distances.push_back(local_dist(gn, target, R));
        rep.stages.push_back(std::move(stage));
    }
    return rep;
}

}  // namespace locapprox

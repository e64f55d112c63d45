// SPDX-License-Identifier: Apache-2.0
#include "locapprox/distribution.hpp"

#include <sstream>

#include "text_util.hpp"

namespace locapprox {

Rational TypeDistribution::total() const {
    Rational sum = 0;
    for (const auto& [t, w] : weights) sum += w;
    return sum;
}

void TypeDistribution::validate() const {
    params.validate();
    for (const auto& [t, w] : weights) {
        if (w < 0) throw ValidationError("negative weight on type " + t.encoding());
        if (t.params() != params) throw ValidationError("type " + t.encoding() + " has mismatched parameters");
    }
    Rational sum = total();
    if (exact) {
        if (sum != 1) throw ValidationError("weights sum to " + to_string(sum) + ", expected exactly 1");
    } else if (std::abs(to_double(sum - 1)) > kDecimalTolerance) {
        throw ValidationError("weights sum to " + to_string(sum) + ", not within tolerance of 1");
    }
}

Rational ResidualReport::at(const std::string& tau, const std::string& tau2) const {
    auto it = residual.find({tau, tau2});
    return it == residual.end() ? Rational(0) : it->second;
}

TypeDistribution from_graph(const ColoredGraph& g, int k) {
    if (k < 0) throw ValidationError("k must be >= 0");
    if (g.size() == 0) throw ValidationError("cannot extract a distribution from an empty graph");
    std::map<std::string, long long> counts;
    BallExtractor ex(g);
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        BallType b = ex.extract(v, k + 1);
        if (!b.is_tree())
            throw ValidationError("the " + std::to_string(k + 1) + "-ball of vertex " + std::to_string(v) +
                                  " contains a cycle (girth must exceed " + std::to_string(2 * k + 3) + ")");
        ++counts[b.id];
    }
    TypeDistribution q;
    q.params = g.params.with_radius(k + 1);
    const long long n = static_cast<long long>(g.size());
    for (const auto& [enc, cnt] : counts) q.weights.emplace(RootedTreeType::parse(q.params, enc), Rational(cnt, n));
    return q;
}

ResidualReport check_unimodular(const TypeDistribution& q) {
    if (q.k() < 0) throw ValidationError("unimodularity needs radius >= 1");
    ResidualReport rep;
    rep.k = q.k();
    rep.tolerance = q.exact ? 0.0 : TypeDistribution::kDecimalTolerance;
    // flow[(tau, tau')] = sum_{t < tau} q(t) adm(t, tau')
    std::map<std::pair<std::string, std::string>, Rational> flow;
    for (const auto& [t, w] : q.weights) {
        if (w == 0) continue;
        std::string tau = truncate(t, q.k()).encoding();
        for (const auto& [tau2, count] : adm_row(t, q.k())) flow[{tau, tau2}] += w * count;
    }
    for (const auto& [key, value] : flow) {
        const auto& [a, b] = key;
        if (rep.residual.count(key)) continue;
        auto back = flow.find({b, a});
        Rational res = value - (back == flow.end() ? Rational(0) : back->second);
        rep.residual[{a, b}] = res;
        rep.residual[{b, a}] = -res;
    }
    rep.max_abs = 0;
    for (const auto& [key, value] : rep.residual) rep.max_abs = std::max(rep.max_abs, Rational(abs(value)));
    rep.passes = q.exact ? rep.max_abs == 0 : to_double(rep.max_abs) <= rep.tolerance;
    return rep;
}

SimpleAdmResult check_simple_adm(const TypeDistribution& q) {
    if (q.k() < 0) throw ValidationError("adm needs radius >= 1");
    for (const auto& [t, w] : q.weights) {
        if (w == 0) continue;
        for (const auto& [tau, count] : adm_row(t, q.k()))
            if (count > 1) return SimpleAdmResult{false, t.encoding(), tau, count};
    }
    return {};
}

TypeDistribution project(const TypeDistribution& q, int ell) {
    if (ell < 0 || ell > q.params.r)
        throw ValidationError("projection radius " + std::to_string(ell) + " outside 0.." + std::to_string(q.params.r));
    TypeDistribution out;
    out.params = q.params.with_radius(ell);
    out.exact = q.exact;
    for (const auto& [t, w] : q.weights) out.weights[truncate(t, ell)] += w;
    return out;
}

TypeDistribution parse_distribution(std::string_view text) {
    TypeDistribution q;
    bool have_header = false;
    detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        if (!have_header) {
            if (tok[0] != "dist") throw ParseError(lineno, "expected 'dist d=<int> c=<int> k=<int>' header");
            auto kv = detail::parse_kv(tok, 1, lineno);
            q.params.d = detail::require_int(kv, "d", lineno);
            q.params.c = detail::require_int(kv, "c", lineno);
            int k = detail::require_int(kv, "k", lineno);
            if (q.params.d < 1 || q.params.c < 1 || k < -1) throw ParseError(lineno, "invalid d, c or k");
            q.params.r = k + 1;
            have_header = true;
            return;
        }
        if (tok[0] != "t" || tok.size() != 3) throw ParseError(lineno, "expected 't <encoding> <num>/<den>'");
        RootedTreeType t;
        Rational w;
        bool exact = true;
        try {
            t = RootedTreeType::parse(q.params, tok[1]);
            w = parse_rational(tok[2], &exact);
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
        if (w < 0) throw ParseError(lineno, "negative weight");
        q.exact = q.exact && exact;
        if (!q.weights.emplace(t, w).second) throw ParseError(lineno, "duplicate type " + t.encoding());
    });
    if (!have_header) throw ParseError(1, "missing 'dist' header");
    std::erase_if(q.weights, [](const auto& kv) { return kv.second == 0; });
    try {
        q.validate();
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("distribution: ") + e.what());
    }
    return q;
}

TypeDistribution read_distribution_file(const std::filesystem::path& path) {
    return parse_distribution(detail::slurp(path));
}

std::string write_distribution(const TypeDistribution& q) {
    std::ostringstream out;
    out << "dist d=" << q.params.d << " c=" << q.params.c << " k=" << q.k() << "\n";
    for (const auto& [t, w] : q.weights) out << "t " << t.encoding() << ' ' << to_string(w) << '\n';
    return out.str();
}

void write_distribution_file(const TypeDistribution& q, const std::filesystem::path& path) {
    detail::spit(path, write_distribution(q));
}

}  // namespace locapprox

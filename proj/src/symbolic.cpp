#include "vmodel/symbolic.hpp"

#include "vmodel/error.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/permutations.hpp"

#include <cctype>
#include <string>

namespace vmodel {

XVar make_xvar(int i, int j)
{
    return i <= j ? XVar{i, j} : XVar{j, i};
}

std::string to_string(const YPolynomial& p)
{
    return p.to_string([](const MultisetIndex& a) {
        std::string s = "y[";
        for (int i = 0; i < a.colors(); ++i)
            s += (i ? "," : "") + std::to_string(a[static_cast<std::size_t>(i)]);
        return s + "]";
    });
}

std::string to_string(const XPolynomial& p)
{
    return p.to_string(
        [](const XVar& v) { return "x[" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "]"; });
}

std::string to_string(const ZPolynomial& p)
{
    return p.to_string(
        [](const ZVar& v) { return "z[" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) + "]"; });
}

XPolynomial parse_xmonomial(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty monomial");
    Scalar coeff(1);
    std::vector<std::pair<XVar, int>> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('*', pos);
        if (end == std::string::npos)
            end = s.size();
        std::string factor = s.substr(pos, end - pos);
        if (!factor.empty() && factor[0] == 'x') {
            std::size_t p = 1;
            if (p >= factor.size() || factor[p] != '[')
                throw ParseError("expected '[' in '" + factor + "'");
            ++p;
            std::string& f = factor;
            auto read = [&]() {
                std::size_t q = p;
                while (q < f.size() && std::isdigit(static_cast<unsigned char>(f[q])))
                    ++q;
                if (q == p)
                    throw ParseError("expected an index in '" + f + "'");
                int v = std::stoi(f.substr(p, q - p));
                p = q;
                return v;
            };
            int i = read();
            if (p >= f.size() || f[p] != ',')
                throw ParseError("expected ',' in '" + f + "'");
            ++p;
            int j = read();
            if (p >= f.size() || f[p] != ']')
                throw ParseError("expected ']' in '" + f + "'");
            ++p;
            int e = 1;
            if (p < f.size()) {
                if (f[p] != '^')
                    throw ParseError("unexpected text after variable in '" + f + "'");
                ++p;
                e = read();
            }
            if (p != f.size())
                throw ParseError("trailing text in '" + f + "'");
            if (i < 1 || j < 1)
                throw ParseError("variable indices are 1-based");
            factors.emplace_back(make_xvar(i - 1, j - 1), e);
        } else {
            coeff *= Scalar::parse(factor);
        }
        pos = end + 1;
    }
    XPolynomial q;
    q.add_term(XPolynomial::make_monomial(std::move(factors)), coeff);
    return q;
}

Scalar evaluate(const YPolynomial& p, const VertexModel& y)
{
    Scalar total = Scalar::zero(y.ring());
    for (const auto& [m, c] : p.terms()) {
        Scalar term = c;
        for (const auto& [alpha, e] : m)
            term *= pow(y.value(alpha), static_cast<unsigned>(e));
        total += term;
    }
    return total;
}

QuantumGraph QuantumGraph::single(const Multigraph& g, const Scalar& coeff)
{
    QuantumGraph q;
    q.add(g, coeff);
    return q;
}

void QuantumGraph::add(const Multigraph& g, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto key = canonical_form(g);
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, c);
    return *this;
}

QuantumGraph operator*(const Scalar& s, const QuantumGraph& q)
{
    QuantumGraph r;
    for (const auto& [g, c] : q.terms_)
        r.add(g, s * c);
    return r;
}

QuantumGraph operator*(const QuantumGraph& a, const QuantumGraph& b)
{
    QuantumGraph r;
    for (const auto& [g, c] : a.terms_)
        for (const auto& [h, d] : b.terms_)
            r.add(disjoint_union(g, h), c * d);
    return r;
}

YPolynomial p_poly(const Multigraph& g, int k, const PartitionLimits& limits)
{
    if (k < 0)
        throw PreconditionError("negative color count");
    if (g.edge_count() > limits.max_brute_edges)
        throw CapExceeded("p_poly expands k^|E| colorings; |E| = " + std::to_string(g.edge_count()) + " exceeds the cap " +
                          std::to_string(limits.max_brute_edges));
    YPolynomial result;
    const int m = static_cast<int>(g.edge_count());
    if (m > 0 && k == 0)
        return result;
    const int n = g.vertex_count();
    std::vector<int> coloring(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    while (true) {
        for (auto& c : counts)
            std::fill(c.begin(), c.end(), 0);
        int e = 0;
        for (auto [u, v] : g.edges()) {
            ++counts[u][static_cast<std::size_t>(coloring[e])];
            ++counts[v][static_cast<std::size_t>(coloring[e])];
            ++e;
        }
        std::vector<std::pair<MultisetIndex, int>> factors;
        factors.reserve(static_cast<std::size_t>(n));
        for (const auto& c : counts)
            factors.emplace_back(MultisetIndex(c), 1);
        result.add_term(YPolynomial::make_monomial(std::move(factors)), Scalar(1));

        int pos = 0;
        while (pos < m && ++coloring[pos] == k)
            coloring[pos++] = 0;
        if (pos == m)
            break;
    }
    return result;
}

YPolynomial p_quantum(const QuantumGraph& q, int k, const PartitionLimits& limits)
{
    YPolynomial r;
    for (const auto& [g, c] : q.terms())
        r += c * p_poly(g, k, limits);
    return r;
}

namespace {

template <class Surgery>
QuantumGraph signed_sum(const Multigraph& g, const PinMap& pins, int max_pins, Surgery&& surgery)
{
    if (static_cast<int>(pins.size()) > max_pins)
        throw CapExceeded("kernel generator over " + std::to_string(pins.size()) + "! permutations exceeds the pin cap " +
                          std::to_string(max_pins));
    pins.validate(g.vertex_count());
    QuantumGraph q;
    for_each_signed_permutation(static_cast<int>(pins.size()), [&](std::span<const int> perm, int sign) {
        q.add(surgery(g, pins.permuted(perm)), Scalar(sign));
    });
    return q;
}

} // namespace

QuantumGraph kernel_generator_pins(const Multigraph& g, const PinMap& pins, int max_pins)
{
    return signed_sum(g, pins, max_pins, [](const Multigraph& h, const PinMap& p) { return add_pins(h, p); });
}

QuantumGraph kernel_generator_contract(const Multigraph& g, const PinMap& pins, int max_pins)
{
    if (pins.targets_meet_pins())
        throw PreconditionError("contraction generators need s(U) disjoint from U");
    return signed_sum(g, pins, max_pins, [](const Multigraph& h, const PinMap& p) { return contract_pins(h, p); });
}

Multigraph mu(const XPolynomial& monomial, int n)
{
    if (monomial.size() != 1 || !monomial.terms().begin()->second.is_one())
        throw PreconditionError("mu is defined on single monomials with coefficient 1");
    std::vector<Multigraph::Edge> edges;
    for (const auto& [v, e] : monomial.terms().begin()->first) {
        if (v.j >= n)
            throw PreconditionError("variable x[" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
                                    "] outside n = " + std::to_string(n));
        for (int r = 0; r < e; ++r)
            edges.emplace_back(v.i, v.j);
    }
    return Multigraph(n, std::move(edges));
}

QuantumGraph mu_linear(const XPolynomial& q, int n)
{
    QuantumGraph r;
    for (const auto& [m, c] : q.terms()) {
        XPolynomial unit;
        unit.add_term(m, Scalar(1));
        r.add(mu(unit, n), c);
    }
    return r;
}

ZPolynomial tau(const XPolynomial& q, int k, int n)
{
    ZPolynomial result;
    for (const auto& [m, c] : q.terms()) {
        ZPolynomial term = ZPolynomial::constant(c);
        for (const auto& [v, e] : m) {
            if (v.j >= n)
                throw PreconditionError("tau: variable outside n = " + std::to_string(n));
            ZPolynomial entry;
            for (int h = 0; h < k; ++h)
                entry.add_term(ZPolynomial::make_monomial({{ZVar{h, v.i}, 1}, {ZVar{h, v.j}, 1}}), Scalar(1));
            for (int r = 0; r < e; ++r)
                term = term * entry;
        }
        result += term;
    }
    return result;
}

YPolynomial sigma(const ZPolynomial& m, int k, int n)
{
    YPolynomial result;
    for (const auto& [mono, c] : m.terms()) {
        std::vector<std::vector<int>> columns(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
        for (const auto& [v, e] : mono) {
            if (v.row >= k || v.col >= n)
                throw PreconditionError("sigma: variable outside the k x n grid");
            columns[v.col][v.row] += e;
        }
        std::vector<std::pair<MultisetIndex, int>> factors;
        for (auto& col : columns)
            factors.emplace_back(MultisetIndex(std::move(col)), 1);
        result.add_term(YPolynomial::make_monomial(std::move(factors)), c);
    }
    return result;
}

DiagramSides diagram_sides(const XPolynomial& monomial, int k, int n, const DiagramLimits& limits)
{
    if (n > limits.max_vertices || k > limits.max_colors || monomial.total_degree() > limits.max_degree)
        throw CapExceeded("diagram check is limited to n <= " + std::to_string(limits.max_vertices) + ", degree <= " +
                          std::to_string(limits.max_degree) + ", k <= " + std::to_string(limits.max_colors));
    DiagramSides sides;
    sides.via_graph = p_poly(mu(monomial, n), k);
    sides.via_z = sigma(tau(monomial, k, n), k, n);
    return sides;
}

bool diagram_check(const XPolynomial& monomial, int k, int n, const DiagramLimits& limits)
{
    return diagram_sides(monomial, k, n, limits).commutes();
}

} // namespace vmodel

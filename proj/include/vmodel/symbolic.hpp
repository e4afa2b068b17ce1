#pragma once

#include "vmodel/graph.hpp"
#include "vmodel/model.hpp"
#include "vmodel/partition.hpp"
#include "vmodel/polynomial.hpp"
#include "vmodel/scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace vmodel {

// Polynomials in the variables y_alpha, alpha in N^k.
using YPolynomial = SparsePolynomial<MultisetIndex>;

// Coordinates x_{i,j} = x_{j,i} on symmetric n x n matrices, stored 0-based
// with i <= j.
struct XVar {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const XVar&, const XVar&) = default;
};

// Coordinates z_{i,j} on k x n matrices: row i is a color, column j a vertex.
struct ZVar {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const ZVar&, const ZVar&) = default;
};

using XPolynomial = SparsePolynomial<XVar>;
using ZPolynomial = SparsePolynomial<ZVar>;

XVar make_xvar(int i, int j);

std::string to_string(const YPolynomial& p);
std::string to_string(const XPolynomial& p);
std::string to_string(const ZPolynomial& p);

// Parses a product such as "x[1,2]^2*x[3,3]" or "2*x[1,2]" (1-based indices,
// "1" for the empty product).
XPolynomial parse_xmonomial(const std::string& text);

Scalar evaluate(const YPolynomial& p, const VertexModel& y);

// Formal linear combination of isomorphism classes; keys are canonical forms.
class QuantumGraph {
public:
    QuantumGraph() = default;
    static QuantumGraph single(const Multigraph& g, const Scalar& coeff = Scalar(1));

    void add(const Multigraph& g, const Scalar& coeff);
    const std::map<Multigraph, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QuantumGraph& operator+=(const QuantumGraph& o);
    friend QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) { return a += b; }
    friend QuantumGraph operator*(const Scalar& s, const QuantumGraph& q);
    // Product extends disjoint union bilinearly.
    friend QuantumGraph operator*(const QuantumGraph& a, const QuantumGraph& b);
    friend bool operator==(const QuantumGraph&, const QuantumGraph&) = default;

private:
    std::map<Multigraph, Scalar> terms_;
};

// p(G): the partition function of G as a polynomial in the model entries.
YPolynomial p_poly(const Multigraph& g, int k, const PartitionLimits& limits = {});
YPolynomial p_quantum(const QuantumGraph& q, int k, const PartitionLimits& limits = {});

// sum over pi in S_U of sgn(pi) G_{s o pi}, resp. G/(s o pi), as quantum graphs.
QuantumGraph kernel_generator_pins(const Multigraph& g, const PinMap& pins, int max_pins = 6);
QuantumGraph kernel_generator_contract(const Multigraph& g, const PinMap& pins, int max_pins = 6);

// The graph ([n], E) whose edge multiset is read off a monomial: the
// exponent of x_{i,j} is the multiplicity of ij, diagonal variables are loops.
// The input must be a single monomial with coefficient 1.
Multigraph mu(const XPolynomial& monomial, int n);
// Linear extension of mu.
QuantumGraph mu_linear(const XPolynomial& q, int n);

// q(z^T z): substitutes x_{i,j} by sum_h z_{h,i} z_{h,j}.
ZPolynomial tau(const XPolynomial& q, int k, int n);

// Sends a z-monomial with column exponent vectors alpha_1..alpha_n to
// prod_j y_{alpha_j}. An all-zero column contributes y_0.
YPolynomial sigma(const ZPolynomial& m, int k, int n);

struct DiagramLimits {
    int max_vertices = 5;
    int max_degree = 6;
    int max_colors = 3;
};

struct DiagramSides {
    YPolynomial via_graph; // p(mu(q))
    YPolynomial via_z;     // sigma(tau(q))
    bool commutes() const { return via_graph == via_z; }
};

DiagramSides diagram_sides(const XPolynomial& monomial, int k, int n, const DiagramLimits& limits = {});
bool diagram_check(const XPolynomial& monomial, int k, int n, const DiagramLimits& limits = {});

} // namespace vmodel

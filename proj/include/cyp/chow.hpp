#ifndef CYP_CHOW_HPP
#define CYP_CHOW_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <cyp/errors.hpp>
#include <cyp/rational.hpp>

// Cohomology-ring models for the closed family: point, CP^n, finite
// products and iterated projective bundles P(N + 1).
//
// Every model is a tower of monic extensions of Q: generator g_i (degree 1)
// satisfies a relation g_i^{k_i} = sum_{j < k_i} a_{ij} g_i^j where the a_{ij}
// only involve g_1..g_{i-1}. The monomials with e_i < k_i form a basis, and
// integration reads off the coefficient of prod g_i^{k_i - 1}, which is the
// iterated fiber integral when each fiber class integrates to 1.
namespace cyp::chow
{

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

class RingModel;
using Model = std::shared_ptr<const RingModel>;

class CohClass
{
public:
    CohClass(Model model, Poly terms);

    static CohClass zero(const Model &model);
    static CohClass one(const Model &model);

    const Model &model() const { return model_; }
    const Poly &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Component of cohomological (complex) degree k.
    CohClass degree_part(int k) const;
    Rational constant_term() const;
    int max_degree() const;

    CohClass &operator+=(const CohClass &o);
    CohClass &operator-=(const CohClass &o);
    CohClass &operator*=(const Rational &c);

    friend CohClass operator+(CohClass a, const CohClass &b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass &b) { return a -= b; }
    friend CohClass operator*(CohClass a, const Rational &c) { return a *= c; }
    friend CohClass operator*(const Rational &c, CohClass a) { return a *= c; }
    friend CohClass operator*(const CohClass &a, const CohClass &b);
    CohClass operator-() const { return *this * Rational(-1); }

    friend bool operator==(const CohClass &a, const CohClass &b)
    {
        return a.model_ == b.model_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void check_same_model(const CohClass &o) const;

    Model model_;
    Poly terms_;
};

class RingModel : public std::enable_shared_from_this<RingModel>
{
public:
    struct Generator {
        std::string name;
        // Relation degree k: g^k is rewritten by `tail`.
        int relation_degree;
        // tail[j] is the coefficient of g^j in the rewrite of g^k.
        std::vector<Poly> tail;
    };

    // Use the factory functions below.
    RingModel(std::vector<Generator> gens, Poly tangent_chern, Model base);

    int dimension() const { return dim_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const std::vector<Generator> &generators() const { return gens_; }
    // Base of a projective bundle, null otherwise.
    const Model &base() const { return base_; }

    // Rewrites any polynomial in the generators into the monomial basis.
    Poly reduce(const Poly &p) const;

    // Basis monomials in graded lexicographic order.
    std::vector<Exponents> basis() const;

    // Integral of a basis monomial: 1 on the top monomial, 0 otherwise.
    Rational integrate_monomial(const Exponents &e) const;

    CohClass generator(int index) const;
    CohClass tangent_chern() const;

    std::string describe() const;

private:
    std::vector<Generator> gens_;
    Poly tangent_chern_;
    Model base_;
    int dim_ = 0;
};

Model point();
Model projective_space(int n);
Model product(const Model &a, const Model &b);

// P(N + 1) over base for a rank-r bundle N with total Chern class chern_n.
// The new generator xi is c_1(O(1)), so the relation reads
// sum_{i=0}^{r+1} c_i(N) xi^{r+1-i} = 0 and the fiber integral of xi^r is 1.
Model projective_bundle(const Model &base, const CohClass &chern_n, int rank);

// prod_i (1 + L_i) for line classes L_i of degree 1.
CohClass split_chern_class(const Model &model, const std::vector<CohClass> &line_classes);

// Pulls a class on base back along the bundle projection.
CohClass pullback(const Model &bundle, const CohClass &c);

// Pushes a class on a projective bundle down to its base.
CohClass fiber_integrate(const CohClass &c);

Rational integrate(const CohClass &c);

// c_k of the tangent bundle.
CohClass tangent_chern_class(const Model &model, int k);

// Integral of c_n; throws ModelError when not an integer.
Rational euler_characteristic(const Model &model);

// dim * chi + int c_1 c_{dim-1}; zero on a point.
Rational adiabatic_coefficient(const Model &model);

// Universal Todd polynomial evaluated at the tangent Chern classes.
CohClass todd_class(const Model &model);

// e^{c} truncated to the model dimension.
CohClass exp_class(const CohClass &c);

// ch(Lambda^p T^*) from the universal Chern-basis polynomial.
CohClass ch_cotangent_exterior(const Model &model, int p);

// int Td(T) ch; ch's degree-0 part must be an integer rank.
Rational hrr_chi(const Model &model, const CohClass &ch);

// chi(CP^n, Omega^p (x) O(s)).
Rational chi_twisted_hodge(int n, int p, int s);

} // namespace cyp::chow

#endif

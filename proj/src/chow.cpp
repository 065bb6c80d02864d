#include <cyp/chow.hpp>

#include <algorithm>
#include <numeric>
#include <span>
#include <sstream>

#include <cyp/symcalc.hpp>

namespace cyp::chow
{

namespace
{

int total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0); }

void add_into(Poly &p, const Exponents &e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            p.erase(it);
        }
    }
}

Poly multiply(const Poly &a, const Poly &b, int max_degree)
{
    Poly out;
    for (const auto &[ea, ca] : a) {
        const int da = total_degree(ea);
        for (const auto &[eb, cb] : b) {
            if (da + total_degree(eb) > max_degree) {
                continue;
            }
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            add_into(out, e, ca * cb);
        }
    }
    return out;
}

// Embeds a polynomial over n generators into one over total generators,
// starting at offset.
Poly shift_vars(const Poly &p, std::size_t offset, std::size_t total)
{
    Poly out;
    for (const auto &[e, c] : p) {
        Exponents f(total, 0);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        out.emplace(std::move(f), c);
    }
    return out;
}

Poly monomial(std::size_t nvars, std::size_t index, int power)
{
    Exponents e(nvars, 0);
    e[index] = power;
    return Poly{{e, Rational(1)}};
}

} // namespace

// ---------------------------------------------------------------------------
// RingModel

RingModel::RingModel(std::vector<Generator> gens, Poly tangent_chern, Model base)
    : gens_(std::move(gens)), base_(std::move(base))
{
    for (const auto &g : gens_) {
        if (g.relation_degree < 1 || static_cast<int>(g.tail.size()) != g.relation_degree) {
            throw ValidationError("generator '" + g.name + "' has a malformed relation");
        }
        dim_ += g.relation_degree - 1;
    }
    tangent_chern_ = reduce(tangent_chern);
}

Poly RingModel::reduce(const Poly &p) const
{
    const std::size_t n = gens_.size();
    Poly out;
    Poly work = p;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Exponents &e = node.key();
        const Rational c = node.mapped();
        if (e.size() != n) {
            throw DomainError("monomial has wrong number of generators");
        }
        // Highest generator violating its relation degree.
        int hit = -1;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            if (e[static_cast<std::size_t>(i)] >= gens_[static_cast<std::size_t>(i)].relation_degree) {
                hit = i;
                break;
            }
        }
        if (hit < 0) {
            if (total_degree(e) <= dim_) {
                add_into(out, e, c);
            }
            continue;
        }
        const auto &g = gens_[static_cast<std::size_t>(hit)];
        Exponents rest = e;
        rest[static_cast<std::size_t>(hit)] -= g.relation_degree;
        for (int j = 0; j < g.relation_degree; ++j) {
            for (const auto &[te, tc] : g.tail[static_cast<std::size_t>(j)]) {
                Exponents f = rest;
                for (std::size_t i = 0; i < n; ++i) {
                    f[i] += te[i];
                }
                f[static_cast<std::size_t>(hit)] += j;
                add_into(work, f, c * tc);
            }
        }
    }
    return out;
}

std::vector<Exponents> RingModel::basis() const
{
    std::vector<Exponents> out{Exponents(gens_.size(), 0)};
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<Exponents> next;
        for (const auto &e : out) {
            for (int p = 0; p < gens_[i].relation_degree; ++p) {
                Exponents f = e;
                f[i] = p;
                next.push_back(std::move(f));
            }
        }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const Exponents &a, const Exponents &b) {
        const int da = total_degree(a);
        const int db = total_degree(b);
        return da != db ? da < db : a > b;
    });
    return out;
}

Rational RingModel::integrate_monomial(const Exponents &e) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (e[i] != gens_[i].relation_degree - 1) {
            return Rational(0);
        }
    }
    return Rational(1);
}

CohClass RingModel::generator(int index) const
{
    if (index < 0 || index >= num_generators()) {
        throw DomainError("generator index out of range");
    }
    return CohClass(shared_from_this(), monomial(gens_.size(), static_cast<std::size_t>(index), 1));
}

CohClass RingModel::tangent_chern() const { return CohClass(shared_from_this(), tangent_chern_); }

std::string RingModel::describe() const
{
    std::ostringstream os;
    os << "dim " << dim_ << ", generators:";
    for (const auto &g : gens_) {
        os << " " << g.name << "^" << g.relation_degree;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CohClass

CohClass::CohClass(Model model, Poly terms) : model_(std::move(model))
{
    if (!model_) {
        throw DomainError("cohomology class without a model");
    }
    terms_ = model_->reduce(terms);
}

CohClass CohClass::zero(const Model &model) { return CohClass(model, {}); }

CohClass CohClass::one(const Model &model)
{
    return CohClass(model, Poly{{Exponents(static_cast<std::size_t>(model->num_generators()), 0), Rational(1)}});
}

CohClass CohClass::degree_part(int k) const
{
    CohClass out = zero(model_);
    for (const auto &[e, c] : terms_) {
        if (total_degree(e) == k) {
            out.terms_.emplace(e, c);
        }
    }
    return out;
}

Rational CohClass::constant_term() const
{
    auto it = terms_.find(Exponents(static_cast<std::size_t>(model_->num_generators()), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int CohClass::max_degree() const
{
    int d = -1;
    for (const auto &kv : terms_) {
        d = std::max(d, total_degree(kv.first));
    }
    return d;
}

void CohClass::check_same_model(const CohClass &o) const
{
    if (model_ != o.model_) {
        throw DomainError("classes belong to different models");
    }
}

CohClass &CohClass::operator+=(const CohClass &o)
{
    check_same_model(o);
    for (const auto &[e, c] : o.terms_) {
        add_into(terms_, e, c);
    }
    return *this;
}

CohClass &CohClass::operator-=(const CohClass &o) { return *this += -o; }

CohClass &CohClass::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
    }
    for (auto &kv : terms_) {
        kv.second *= c;
    }
    return *this;
}

CohClass operator*(const CohClass &a, const CohClass &b)
{
    a.check_same_model(b);
    return CohClass(a.model_, multiply(a.terms_, b.terms_, a.model_->dimension()));
}

std::string CohClass::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    const auto &gens = model_->generators();
    std::vector<std::pair<Exponents, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        const int da = total_degree(a.first);
        const int db = total_degree(b.first);
        return da != db ? da < db : a.first > b.first;
    });
    std::string out;
    for (std::size_t t = 0; t < order.size(); ++t) {
        Rational c = order[t].second;
        if (t > 0) {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) {
                c = -c;
            }
        }
        std::string mono;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int p = order[t].first[i];
            if (p == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += gens[i].name;
            if (p > 1) {
                mono += "^" + std::to_string(p);
            }
        }
        if (mono.empty()) {
            out += c.str();
        } else if (c == Rational(1)) {
            out += mono;
        } else {
            out += c.str() + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Model family

Model point() { return std::make_shared<const RingModel>(std::vector<RingModel::Generator>{}, Poly{{{}, Rational(1)}}, nullptr); }

Model projective_space(int n)
{
    if (n < 0) {
        throw DomainError("projective_space needs n >= 0");
    }
    if (n == 0) {
        return point();
    }
    RingModel::Generator h{"h", n + 1, std::vector<Poly>(static_cast<std::size_t>(n) + 1)};
    // (1 + h)^{n+1} from the Euler sequence.
    Poly tangent;
    for (int k = 0; k <= n; ++k) {
        add_into(tangent, Exponents{k}, binomial(n + 1, k));
    }
    return std::make_shared<const RingModel>(std::vector<RingModel::Generator>{h}, tangent, nullptr);
}

Model product(const Model &a, const Model &b)
{
    const std::size_t na = static_cast<std::size_t>(a->num_generators());
    const std::size_t nb = static_cast<std::size_t>(b->num_generators());
    const std::size_t total = na + nb;
    std::vector<RingModel::Generator> gens;
    for (const auto &g : a->generators()) {
        RingModel::Generator h = g;
        for (auto &t : h.tail) {
            t = shift_vars(t, 0, total);
        }
        gens.push_back(std::move(h));
    }
    for (const auto &g : b->generators()) {
        RingModel::Generator h = g;
        for (auto &t : h.tail) {
            t = shift_vars(t, na, total);
        }
        gens.push_back(std::move(h));
    }
    // Disambiguate repeated names by position.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const bool repeated = std::count_if(gens.begin(), gens.end(), [&](const auto &g) {
                                  return g.name == gens[i].name;
                              }) > 1;
        if (repeated) {
            const std::string base_name = gens[i].name;
            int k = 0;
            for (auto &g : gens) {
                if (g.name == base_name) {
                    g.name = base_name + "_" + std::to_string(++k);
                }
            }
        }
    }
    const Poly tangent = multiply(shift_vars(a->tangent_chern().terms(), 0, total),
                                  shift_vars(b->tangent_chern().terms(), na, total),
                                  a->dimension() + b->dimension());
    return std::make_shared<const RingModel>(std::move(gens), tangent, nullptr);
}

Model projective_bundle(const Model &base, const CohClass &chern_n, int rank)
{
    if (rank < 1) {
        throw ValidationError("projective_bundle needs rank >= 1");
    }
    if (chern_n.model() != base) {
        throw ValidationError("Chern class of N does not live on the base model");
    }
    if (chern_n.constant_term() != Rational(1)) {
        throw ValidationError("total Chern class of N must have degree-0 part 1");
    }
    if (chern_n.max_degree() > rank) {
        throw ValidationError("total Chern class of N has components above its rank");
    }
    const std::size_t nb = static_cast<std::size_t>(base->num_generators());
    const std::size_t total = nb + 1;
    std::vector<RingModel::Generator> gens;
    for (const auto &g : base->generators()) {
        RingModel::Generator h = g;
        for (auto &t : h.tail) {
            t = shift_vars(t, 0, total);
        }
        gens.push_back(std::move(h));
    }
    // xi^{r+1} = -sum_{i=1}^{r} c_i(N) xi^{r+1-i}
    std::vector<Poly> tail(static_cast<std::size_t>(rank) + 1);
    std::vector<Poly> ci(static_cast<std::size_t>(rank) + 1);
    for (int i = 0; i <= rank; ++i) {
        ci[static_cast<std::size_t>(i)] = shift_vars(chern_n.degree_part(i).terms(), 0, total);
    }
    for (int i = 1; i <= rank; ++i) {
        Poly t;
        for (const auto &[e, c] : ci[static_cast<std::size_t>(i)]) {
            t.emplace(e, -c);
        }
        tail[static_cast<std::size_t>(rank + 1 - i)] = std::move(t);
    }
    int depth = 0;
    for (Model m = base; m; m = m->base()) {
        ++depth;
    }
    gens.push_back({depth > 1 ? "xi" + std::to_string(depth) : "xi", rank + 1, std::move(tail)});

    // c(T_rel) = sum_i c_i(N) (1 + xi)^{r+1-i}; c(T) = c(T_rel) * c(T_base).
    const int dim = base->dimension() + rank;
    Poly rel;
    for (int i = 0; i <= rank; ++i) {
        Poly power{{Exponents(total, 0), Rational(1)}};
        Poly one_plus_xi = power;
        add_into(one_plus_xi, monomial(total, nb, 1).begin()->first, Rational(1));
        for (int k = 0; k < rank + 1 - i; ++k) {
            power = multiply(power, one_plus_xi, dim);
        }
        for (const auto &[e, c] : multiply(ci[static_cast<std::size_t>(i)], power, dim)) {
            add_into(rel, e, c);
        }
    }
    const Poly tangent = multiply(rel, shift_vars(base->tangent_chern().terms(), 0, total), dim);
    return std::make_shared<const RingModel>(std::move(gens), tangent, base);
}

CohClass split_chern_class(const Model &model, const std::vector<CohClass> &line_classes)
{
    CohClass out = CohClass::one(model);
    for (const auto &l : line_classes) {
        if (l.model() != model) {
            throw ValidationError("line class from a different model");
        }
        if (l.degree_part(1) != l) {
            throw ValidationError("line class must be homogeneous of degree 1");
        }
        out = out * (CohClass::one(model) + l);
    }
    return out;
}

CohClass pullback(const Model &bundle, const CohClass &c)
{
    if (!bundle->base() || c.model() != bundle->base()) {
        throw DomainError("pullback needs a class on the bundle's base");
    }
    return CohClass(bundle, shift_vars(c.terms(), 0, static_cast<std::size_t>(bundle->num_generators())));
}

CohClass fiber_integrate(const CohClass &c)
{
    const Model &bundle = c.model();
    if (!bundle->base()) {
        throw DomainError("fiber_integrate needs a class on a projective bundle");
    }
    const std::size_t last = static_cast<std::size_t>(bundle->num_generators()) - 1;
    const int top = bundle->generators()[last].relation_degree - 1;
    Poly out;
    for (const auto &[e, coeff] : c.terms()) {
        if (e[last] == top) {
            out.emplace(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(last)), coeff);
        }
    }
    return CohClass(bundle->base(), out);
}

Rational integrate(const CohClass &c)
{
    Rational out;
    for (const auto &[e, coeff] : c.terms()) {
        out += coeff * c.model()->integrate_monomial(e);
    }
    return out;
}

CohClass tangent_chern_class(const Model &model, int k) { return model->tangent_chern().degree_part(k); }

Rational euler_characteristic(const Model &model)
{
    const Rational chi = integrate(tangent_chern_class(model, model->dimension()));
    if (!chi.is_integer()) {
        throw ModelError("non-integral Euler characteristic " + chi.str() + " (" + model->describe() + ")");
    }
    return chi;
}

Rational adiabatic_coefficient(const Model &model)
{
    const int n = model->dimension();
    if (n == 0) {
        return Rational(0);
    }
    return Rational(n) * euler_characteristic(model) +
           integrate(tangent_chern_class(model, 1) * tangent_chern_class(model, n - 1));
}

namespace
{

std::vector<CohClass> chern_classes(const Model &model)
{
    std::vector<CohClass> out;
    for (int k = 1; k <= model->dimension(); ++k) {
        out.push_back(tangent_chern_class(model, k));
    }
    return out;
}

} // namespace

CohClass todd_class(const Model &model)
{
    const int n = model->dimension();
    if (n == 0) {
        return CohClass::one(model);
    }
    const auto c = chern_classes(model);
    return sym::evaluate(sym::todd(n, n), std::span<const CohClass>(c), CohClass::one(model));
}

CohClass exp_class(const CohClass &c)
{
    const Model &model = c.model();
    if (!c.constant_term().is_zero()) {
        throw DomainError("exp_class needs a class without degree-0 part");
    }
    CohClass acc = CohClass::one(model);
    for (int k = model->dimension(); k >= 1; --k) {
        acc = CohClass::one(model) + (c * acc) * Rational(1, k);
    }
    return acc;
}

CohClass ch_cotangent_exterior(const Model &model, int p)
{
    const int n = model->dimension();
    if (p < 0 || p > n) {
        throw DomainError("exterior power outside [0, dim]");
    }
    if (n == 0) {
        return CohClass::one(model);
    }
    const auto c = chern_classes(model);
    return sym::evaluate(sym::ch_exterior(n, p, n), std::span<const CohClass>(c), CohClass::one(model));
}

Rational hrr_chi(const Model &model, const CohClass &ch)
{
    if (ch.model() != model) {
        throw ValidationError("Chern character from a different model");
    }
    if (!ch.constant_term().is_integer()) {
        throw ValidationError("Chern character rank " + ch.constant_term().str() + " is not an integer");
    }
    return integrate(todd_class(model) * ch);
}

Rational chi_twisted_hodge(int n, int p, int s)
{
    if (n < 0 || p < 0 || p > n) {
        throw DomainError("chi_twisted_hodge needs 0 <= p <= n");
    }
    const Model cp = projective_space(n);
    CohClass twist = CohClass::one(cp);
    if (n > 0) {
        twist = exp_class(cp->generator(0) * Rational(s));
    }
    return hrr_chi(cp, ch_cotangent_exterior(cp, p) * twist);
}

} // namespace cyp::chow

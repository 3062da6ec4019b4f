#include "homds/poly.hpp"

#include <algorithm>
#include <map>

namespace homds {

bool lex_less(const Monomial& a, const Monomial& b) {
    require(a.size() == b.size(), Err::DimensionMismatch, "monomial arity mismatch");
    for (std::size_t i = a.size(); i > 0; --i) {
        if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1];
    }
    return false;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

void PolyTuple::validate() const {
    require(r >= 1 && r <= 8, Err::BadParams, "variable count must lie in [1, 8]");
    for (const auto& p : polys) {
        for (std::size_t t = 0; t < p.terms.size(); ++t) {
            const auto& term = p.terms[t];
            require(term.exp.size() == r, Err::DimensionMismatch, "term arity mismatch");
            require(term.coeff != 0, Err::MalformedInput, "zero coefficients are not stored");
            require(term.coeff < field.order(), Err::MalformedInput, "coefficient out of range");
            require(total_degree(term.exp) <= static_cast<int>(max_degree), Err::TooLarge,
                    "term exceeds the degree cap");
            if (t > 0)
                require(lex_less(p.terms[t - 1].exp, term.exp), Err::MalformedInput,
                        "terms must be sorted and distinct");
        }
    }
}

Fe eval_poly(const Field& f, const SparsePoly& p, std::span<const Fe> point) {
    Fe acc = 0;
    for (const auto& term : p.terms) {
        require(term.exp.size() == point.size(), Err::DimensionMismatch, "point arity mismatch");
        Fe v = term.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (term.exp[i] == 0) continue;
            v = f.mul(v, f.pow(point[i], static_cast<std::int64_t>(term.exp[i])));
        }
        acc = f.add(acc, v);
    }
    return acc;
}

std::vector<Monomial> support_union(const PolyTuple& t) {
    std::vector<Monomial> all;
    for (const auto& p : t.polys)
        for (const auto& term : p.terms) all.push_back(term.exp);
    std::sort(all.begin(), all.end(), lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

Mat coefficient_matrix(const PolyTuple& t, const std::vector<Monomial>& support) {
    std::map<Monomial, std::uint32_t> index;
    for (std::uint32_t j = 0; j < support.size(); ++j) index[support[j]] = j;
    Mat m(t.field, t.k(), static_cast<std::uint32_t>(support.size()));
    for (std::uint32_t i = 0; i < t.k(); ++i) {
        for (const auto& term : t.polys[i].terms) {
            auto it = index.find(term.exp);
            require(it != index.end(), Err::IndexOutOfRange, "support misses a term");
            m.set(i, it->second, term.coeff);
        }
    }
    return m;
}

}  // namespace homds

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <steiner/steiner.hpp>

namespace support {

using namespace steiner;

// "0234+0124", "12-02+01", "2*0", "-2*0"; "0" alone is the zero element only
// when the basis has no element named "0", so use "" for zero.
inline GroupElement ge(const BasisPtr& basis, const std::string& expr)
{
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < expr.size()) {
        int sign = 1;
        if (expr[pos] == '+' || expr[pos] == '-') {
            sign = expr[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = expr.find_first_of("+-", pos);
        std::string tok = expr.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        Integer coeff = 1;
        if (auto star = tok.find('*'); star != std::string::npos) {
            coeff = Integer(tok.substr(0, star));
            tok = tok.substr(star + 1);
        }
        terms.emplace_back(basis->at(tok), sign * coeff);
        pos = end == std::string::npos ? expr.size() : end;
    }
    return terms.empty() ? GroupElement() : GroupElement(basis, terms);
}

inline GroupElement ge(const Adc& k, const std::string& expr) { return ge(k.basis(), expr); }
inline Chain ch(const Adc& k, const std::string& expr) { return Chain(ge(k, expr)); }
inline Chain ch(const BasisPtr& b, const std::string& expr) { return Chain(ge(b, expr)); }

// Independent face-word oracle on vertex bitmasks: enumerates increasing
// index sequences with the requested parity pattern and removes vertices by
// position, innermost index first.
inline std::map<std::string, int> oracle_word(std::uint32_t mask, const std::string& word)
{
    std::vector<int> verts;
    for (int j = 0; j < 32; ++j)
        if (mask >> j & 1)
            verts.push_back(j);
    const int dim = static_cast<int>(verts.size()) - 1;
    std::map<std::string, int> out;
    const int len = static_cast<int>(word.size());
    for (std::uint32_t pick = 0; pick < (1u << (dim + 1)); ++pick) {
        if (__builtin_popcount(pick) != len)
            continue;
        std::vector<int> seq;
        for (int j = 0; j <= dim; ++j)
            if (pick >> j & 1)
                seq.push_back(j);
        bool match = true;
        for (int j = 0; j < len; ++j)
            if ((seq[j] % 2 == 0 ? 'p' : 'i') != word[j])
                match = false;
        if (!match)
            continue;
        // Increasing positions removed from the outermost application inward
        // leave exactly the vertices at those positions deleted.
        std::string id;
        for (int j = 0; j <= dim; ++j)
            if (!(pick >> j & 1))
                id += std::to_string(verts[j]);
        out[id] += 1;
    }
    return out;
}

inline std::map<std::string, int> as_map(const Chain& c)
{
    std::map<std::string, int> out;
    for (const auto& [b, coeff] : c.terms())
        out[c.basis()->id(b)] = coeff.convert_to<int>();
    return out;
}

inline std::uint32_t mask_of(const std::string& id)
{
    std::uint32_t m = 0;
    for (char c : id)
        m |= 1u << (c - '0');
    return m;
}

inline std::string alternating(char first, int len)
{
    std::string w;
    for (int j = 0; j < len; ++j)
        w += (j % 2 == 0) ? first : (first == 'i' ? 'p' : 'i');
    return w;
}

// Random non-negative chain over the whole basis with small coefficients.
inline Chain random_chain(const BasisPtr& basis, std::mt19937_64& rng, int max_coeff = 3, double density = 0.3)
{
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::uniform_int_distribution<int> coeff(1, max_coeff);
    std::vector<Term> terms;
    for (std::uint32_t b = 0; b < basis->size(); ++b)
        if (keep(rng) < density)
            terms.emplace_back(b, coeff(rng));
    return terms.empty() ? Chain() : Chain(GroupElement(basis, terms));
}

inline GroupElement random_element(const BasisPtr& basis, std::mt19937_64& rng, int bound = 3)
{
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Term> terms;
    for (std::uint32_t b = 0; b < basis->size(); ++b)
        terms.emplace_back(b, coeff(rng));
    return GroupElement(basis, terms);
}

} // namespace support

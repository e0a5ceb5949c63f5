#pragma once

#include <map>
#include <string>
#include <vector>

#include "simplicial.hpp"

namespace steiner {

struct RawMorphism {
    Adc source;
    Adc target;
    std::map<std::string, std::map<std::string, Integer>> images; // missing ids map to 0
};

class AdcMorphism {
public:
    static AdcMorphism validate(const RawMorphism& raw)
    {
        const Basis& src = *raw.source.basis();
        const Basis& tgt = *raw.target.basis();
        std::vector<GroupElement> images(src.size());
        for (const auto& [id, image] : raw.images) {
            std::uint32_t b = src.at(id);
            std::vector<Term> terms;
            for (const auto& [t, c] : image)
                terms.emplace_back(tgt.at(t), c);
            images[b] = terms.empty() ? GroupElement() : GroupElement(raw.target.basis(), std::move(terms));
        }
        return from_images(raw.source, raw.target, std::move(images));
    }

    static AdcMorphism from_images(Adc source, Adc target, std::vector<GroupElement> images)
    {
        AdcMorphism f;
        f.source_ = std::move(source);
        f.target_ = std::move(target);
        f.images_ = std::move(images);
        f.check();
        return f;
    }

    const Adc& source() const { return source_; }
    const Adc& target() const { return target_; }
    const GroupElement& image(std::uint32_t b) const { return images_.at(b); }
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement operator()(const GroupElement& x) const
    {
        source_.check_basis(x);
        GroupElement out;
        for (const auto& [b, c] : x.terms())
            if (!images_[b].is_zero())
                out = combine(out, images_[b], 1, c);
        return out;
    }

    Chain operator()(const Chain& x) const { return Chain((*this)(x.value())); }

private:
    void check() const
    {
        const Basis& src = *source_.basis();
        if (images_.size() != src.size())
            throw Error(ErrorCode::MalformedInput, "image count");
        for (std::uint32_t b = 0; b < src.size(); ++b) {
            const GroupElement& y = images_[b];
            target_.check_basis(y);
            if (!y.is_zero() && (!y.is_homogeneous() || degree(y) != src.dim(b)))
                throw Error(ErrorCode::GradingViolation, "image of " + src.id(b));
            if (!y.is_nonnegative())
                throw Error(ErrorCode::NegativeImage, src.id(b));
        }
        for (std::uint32_t b = 0; b < src.size(); ++b) {
            if (src.dim(b) == 0) {
                if (target_.augment(images_[b]) != source_.augmentation_of(b))
                    throw Error(ErrorCode::AugmentationMismatch, src.id(b));
            } else if (!((*this)(source_.boundary_of(b)) == target_.boundary(images_[b]))) {
                throw Error(ErrorCode::BoundaryMismatch, src.id(b));
            }
        }
    }

    Adc source_;
    Adc target_;
    std::vector<GroupElement> images_;
};

inline AdcMorphism validate_morphism(const RawMorphism& raw) { return AdcMorphism::validate(raw); }

inline AdcMorphism identity_morphism(const Adc& k)
{
    std::vector<GroupElement> images;
    for (std::uint32_t b = 0; b < k.basis()->size(); ++b)
        images.push_back(GroupElement::of(k.basis(), b));
    return AdcMorphism::from_images(k, k, std::move(images));
}

// Sends each source id to the target element with the same id.
inline AdcMorphism inclusion_morphism(const Adc& source, const Adc& target)
{
    std::vector<GroupElement> images;
    for (std::uint32_t b = 0; b < source.basis()->size(); ++b)
        images.push_back(GroupElement::of(target.basis(), target.at(source.basis()->id(b))));
    return AdcMorphism::from_images(source, target, std::move(images));
}

// g after f.
inline AdcMorphism compose(const AdcMorphism& g, const AdcMorphism& f)
{
    if (f.target().basis() != g.source().basis())
        throw Error(ErrorCode::BasisMismatch, "morphisms do not compose");
    std::vector<GroupElement> images;
    for (const auto& y : f.images())
        images.push_back(g(y));
    return AdcMorphism::from_images(f.source(), g.target(), std::move(images));
}

inline Cell apply_mu(const AdcMorphism& f, const Cell& c)
{
    const Adc& k = f.source();
    const Adc& l = f.target();
    const Chain& a = c.chain;
    const int top = degree(a);
    GroupElement out = f(homogeneous_part(a, top).value());
    for (int n = 0; n < top; ++n) {
        out += f(homogeneous_part(d(k, a, n, Sign::plus), n).value());
        Chain upper = f(homogeneous_part(d(k, a, n + 1, Sign::plus), n + 1));
        out -= boundary_sign(l, upper, Sign::plus).value();
    }
    return Cell{Chain(out), c.dim};
}

inline SteinerTable map_table(const AdcMorphism& f, const SteinerTable& x)
{
    SteinerTable t;
    t.dim = x.dim;
    for (const auto& row : x.minus)
        t.minus.push_back(f(row));
    for (const auto& row : x.plus)
        t.plus.push_back(f(row));
    return t;
}

inline bool is_quasi_rigid(const AdcMorphism& f)
{
    const Adc& k = f.source();
    const auto& atoms = k.atoms();
    for (std::uint32_t b = 0; b < k.basis()->size(); ++b) {
        const GroupElement& y = f.image(b);
        if (y.is_zero())
            continue;
        if (y.size() != 1 || y.terms().front().second != 1)
            return false;
        for (int j = 0; j < k.basis()->dim(b); ++j)
            if (!disjoint(f(atoms[b].minus[j]), f(atoms[b].plus[j])))
                return false;
    }
    return true;
}

inline std::string globe_id(int k, Sign s) { return "e" + std::to_string(k) + sign_char(s); }
inline std::string globe_top_id(int n) { return "e" + std::to_string(n); }

inline Adc globe_adc(int n)
{
    if (n < 0)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    RawAdc raw;
    if (n == 0) {
        raw.basis.emplace_back(globe_top_id(0), 0);
        raw.aug[globe_top_id(0)] = 1;
        return validate_adc(raw);
    }
    for (int k = 0; k < n; ++k)
        for (Sign s : {Sign::minus, Sign::plus}) {
            std::string id = globe_id(k, s);
            raw.basis.emplace_back(id, k);
            if (k == 0)
                raw.aug[id] = 1;
            else
                raw.diff[id] = {{globe_id(k - 1, Sign::plus), 1}, {globe_id(k - 1, Sign::minus), -1}};
        }
    raw.basis.emplace_back(globe_top_id(n), n);
    raw.diff[globe_top_id(n)] = {{globe_id(n - 1, Sign::plus), 1}, {globe_id(n - 1, Sign::minus), -1}};
    return validate_adc(raw);
}

// Normal form d_{k_1} d_{k_2} ... d_{k_l} i_n with k_1 >= ... >= k_l of a simplex
// of the standard n-simplex; returns (k_1, l), k_1 = -1 for the top simplex.
inline std::pair<int, int> leading_face(const Simplex& v, int n)
{
    std::vector<int> removed;
    for (int j = 0; j <= n; ++j)
        if (std::find(v.vertices.begin(), v.vertices.end(), j) == v.vertices.end())
            removed.push_back(j);
    int l = static_cast<int>(removed.size());
    if (l == 0)
        return {-1, 0};
    return {removed.back() - (l - 1), l};
}

inline AdcMorphism projection_p(int n)
{
    if (n < 1)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    Oriental o = oriental(n);
    Adc globe = globe_adc(n);
    std::vector<GroupElement> images;
    for (const auto& v : o.simplicial.simplices()) {
        auto [k1, l] = leading_face(v, n);
        std::string id;
        if (l == 0)
            id = globe_top_id(n);
        else if (k1 == 0)
            id = globe_id(n - l, Sign::plus);
        else if (k1 == 1)
            id = globe_id(n - l, Sign::minus);
        images.push_back(id.empty() ? GroupElement() : GroupElement::of(globe.basis(), globe.at(id)));
    }
    return AdcMorphism::from_images(o.complex, globe, std::move(images));
}

// Complex freely generated by y: f_n -> e_n *_{n-1} x over a chain of globes.
inline Adc eq_adc(int n)
{
    if (n < 1)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    RawAdc raw;
    auto add = [&](const std::string& id, int dim, std::map<std::string, Integer> diff) {
        raw.basis.emplace_back(id, dim);
        if (dim == 0)
            raw.aug[id] = 1;
        else
            raw.diff[id] = std::move(diff);
    };
    auto globe_boundary = [](int k) -> std::map<std::string, Integer> {
        if (k == 0)
            return {};
        return {{"i" + std::to_string(k - 1) + "+", 1}, {"i" + std::to_string(k - 1) + "-", -1}};
    };
    for (int k = 0; k < n - 1; ++k)
        for (char s : {'-', '+'})
            add("i" + std::to_string(k) + s, k, globe_boundary(k));
    for (const char* id : {"a", "b", "c"})
        add(id, n - 1, globe_boundary(n - 1));
    add("f", n, {{"c", 1}, {"a", -1}});
    add("e", n, {{"c", 1}, {"b", -1}});
    add("x", n, {{"b", 1}, {"a", -1}});
    add("y", n + 1, {{"e", 1}, {"x", 1}, {"f", -1}});
    return validate_adc(raw);
}

inline AdcMorphism morphism_q(int n)
{
    if (n < 1)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    Oriental o = oriental(n + 1);
    Adc eq = eq_adc(n);
    std::vector<GroupElement> images;
    for (const auto& v : o.simplicial.simplices()) {
        std::vector<int> removed;
        for (int j = 0; j <= n + 1; ++j)
            if (std::find(v.vertices.begin(), v.vertices.end(), j) == v.vertices.end())
                removed.push_back(j);
        const int l = static_cast<int>(removed.size());
        // k_j of the normal form, outermost first.
        std::vector<int> ks;
        for (int j = l - 1; j >= 0; --j)
            ks.push_back(removed[static_cast<std::size_t>(j)] - j);
        std::string id;
        if (l == 0) {
            id = "y";
        } else if (l == 1) {
            id = ks[0] == 0 ? "e" : ks[0] == 1 ? "f" : ks[0] == 2 ? "x" : "";
        } else if (l == 2) {
            if (ks[0] == 0 && ks[1] == 0)
                id = "c";
            else if (ks[0] == 1 && ks[1] == 0)
                id = "b";
            else if (ks[0] == 1 && ks[1] == 1)
                id = "a";
        } else if (ks[0] == 0 || ks[0] == 1) {
            id = "i" + std::to_string(n - l + 1) + (ks[0] == 0 ? "+" : "-");
        }
        images.push_back(id.empty() ? GroupElement() : GroupElement::of(eq.basis(), eq.at(id)));
    }
    return AdcMorphism::from_images(o.complex, eq, std::move(images));
}

} // namespace steiner

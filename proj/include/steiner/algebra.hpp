#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace steiner {

using Integer = boost::multiprecision::cpp_int;

enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

// Graded set of basis ids, stored in (dim, id) order so that the position of an
// element is its canonical rank.
class Basis {
public:
    static std::shared_ptr<const Basis> make(std::vector<std::pair<std::string, int>> elements)
    {
        std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second < b.second : a.first < b.first;
        });
        auto basis = std::shared_ptr<Basis>(new Basis());
        for (auto& [id, dim] : elements) {
            if (dim < 0)
                throw Error(ErrorCode::GradingViolation, "negative dimension for " + id);
            if (basis->index_.count(id))
                throw Error(ErrorCode::DuplicateBasisId, id);
            basis->index_.emplace(id, static_cast<std::uint32_t>(basis->ids_.size()));
            basis->ids_.push_back(std::move(id));
            basis->dims_.push_back(dim);
        }
        int top = basis->dims_.empty() ? -1 : basis->dims_.back();
        basis->offsets_.assign(static_cast<std::size_t>(top + 2), 0);
        for (int d : basis->dims_)
            ++basis->offsets_[static_cast<std::size_t>(d) + 1];
        for (std::size_t k = 1; k < basis->offsets_.size(); ++k)
            basis->offsets_[k] += basis->offsets_[k - 1];
        return basis;
    }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::uint32_t i) const { return ids_.at(i); }
    int dim(std::uint32_t i) const { return dims_.at(i); }
    int max_dim() const { return static_cast<int>(offsets_.size()) - 2; }

    std::optional<std::uint32_t> find(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::uint32_t at(const std::string& id) const
    {
        auto found = find(id);
        if (!found)
            throw Error(ErrorCode::UnknownBasisId, id);
        return *found;
    }

    // Half-open index range of the elements of dimension k.
    std::pair<std::uint32_t, std::uint32_t> dim_range(int k) const
    {
        if (k < 0 || k > max_dim())
            return {0, 0};
        return {offsets_[static_cast<std::size_t>(k)], offsets_[static_cast<std::size_t>(k) + 1]};
    }

private:
    Basis() = default;

    std::vector<std::string> ids_;
    std::vector<int> dims_;
    std::vector<std::uint32_t> offsets_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

struct BasisElement {
    BasisPtr basis;
    std::uint32_t index = 0;

    const std::string& id() const { return basis->id(index); }
    int dim() const { return basis->dim(index); }

    friend bool operator==(const BasisElement& a, const BasisElement& b)
    {
        return a.basis == b.basis && a.index == b.index;
    }
};

using Term = std::pair<std::uint32_t, Integer>;

// Finite integer combination of basis elements. The zero element carries no basis
// and mixes with anything; two non-zero operands must share their basis.
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(BasisPtr basis, std::vector<Term> terms) : basis_(std::move(basis)), terms_(std::move(terms))
    {
        if (!basis_ && !terms_.empty())
            throw Error(ErrorCode::BasisMismatch, "terms without a basis");
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (t.first >= basis_->size())
                throw Error(ErrorCode::UnknownBasisId, "index " + std::to_string(t.first));
            if (!merged.empty() && merged.back().first == t.first)
                merged.back().second += t.second;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.second == 0; });
        terms_ = std::move(merged);
        if (terms_.empty())
            basis_.reset();
    }

    static GroupElement of(const BasisPtr& basis, std::uint32_t index, Integer coeff = 1)
    {
        return GroupElement(basis, {{index, std::move(coeff)}});
    }

    static GroupElement of(const BasisElement& b, Integer coeff = 1) { return of(b.basis, b.index, std::move(coeff)); }

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coeff(std::uint32_t index) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                                   [](const Term& t, std::uint32_t i) { return t.first < i; });
        if (it == terms_.end() || it->first != index)
            return 0;
        return it->second;
    }

    bool contains(std::uint32_t index) const { return coeff(index) != 0; }

    int dim_of(const Term& t) const { return basis_->dim(t.first); }

    // Highest dimension in the support, -1 for zero.
    int top_dim() const { return terms_.empty() ? -1 : basis_->dim(terms_.back().first); }

    bool is_homogeneous() const
    {
        return terms_.empty() || basis_->dim(terms_.front().first) == basis_->dim(terms_.back().first);
    }

    bool is_nonnegative() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
    }

    // Terms whose dimension satisfies the predicate.
    template <class Pred>
    GroupElement filter_dim(Pred pred) const
    {
        std::vector<Term> kept;
        for (const auto& t : terms_)
            if (pred(basis_->dim(t.first)))
                kept.push_back(t);
        return kept.empty() ? GroupElement() : GroupElement(basis_, std::move(kept));
    }

    template <class Op>
    static GroupElement merge(const GroupElement& x, const GroupElement& y, Op op)
    {
        BasisPtr basis = common_basis(x, y);
        std::vector<Term> out;
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        static const Integer zero = 0;
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
                out.emplace_back(i->first, op(i->second, zero));
                ++i;
            } else if (i == x.terms_.end() || j->first < i->first) {
                out.emplace_back(j->first, op(zero, j->second));
                ++j;
            } else {
                out.emplace_back(i->first, op(i->second, j->second));
                ++i;
                ++j;
            }
        }
        std::erase_if(out, [](const Term& t) { return t.second == 0; });
        if (out.empty())
            return {};
        GroupElement result;
        result.basis_ = basis;
        result.terms_ = std::move(out);
        return result;
    }

    static BasisPtr common_basis(const GroupElement& x, const GroupElement& y)
    {
        if (!x.basis_)
            return y.basis_;
        if (!y.basis_ || x.basis_ == y.basis_)
            return x.basis_;
        throw Error(ErrorCode::BasisMismatch, "elements of different complexes");
    }

    friend GroupElement operator+(const GroupElement& x, const GroupElement& y)
    {
        return merge(x, y, [](const Integer& a, const Integer& b) { return Integer(a + b); });
    }

    friend GroupElement operator-(const GroupElement& x, const GroupElement& y)
    {
        return merge(x, y, [](const Integer& a, const Integer& b) { return Integer(a - b); });
    }

    friend GroupElement operator-(const GroupElement& x)
    {
        GroupElement r = x;
        for (auto& t : r.terms_)
            t.second = -t.second;
        return r;
    }

    friend GroupElement operator*(const Integer& c, const GroupElement& x)
    {
        if (c == 0)
            return {};
        GroupElement r = x;
        for (auto& t : r.terms_)
            t.second *= c;
        return r;
    }

    GroupElement& operator+=(const GroupElement& y) { return *this = *this + y; }
    GroupElement& operator-=(const GroupElement& y) { return *this = *this - y; }

    friend bool operator==(const GroupElement& x, const GroupElement& y)
    {
        return x.basis_ == y.basis_ && x.terms_ == y.terms_;
    }

private:
    BasisPtr basis_;
    std::vector<Term> terms_;
};

// Group element with every coefficient positive.
class Chain {
public:
    Chain() = default;

    explicit Chain(GroupElement x) : value_(std::move(x))
    {
        if (!value_.is_nonnegative())
            throw Error(ErrorCode::NegativeCoefficient, "chain with a negative coefficient");
    }

    static Chain of(const BasisPtr& basis, std::uint32_t index, Integer coeff = 1)
    {
        return Chain(GroupElement::of(basis, index, std::move(coeff)));
    }

    static Chain of(const BasisElement& b) { return of(b.basis, b.index); }

    const GroupElement& value() const { return value_; }
    operator const GroupElement&() const { return value_; }

    const BasisPtr& basis() const { return value_.basis(); }
    const std::vector<Term>& terms() const { return value_.terms(); }
    bool is_zero() const { return value_.is_zero(); }
    std::size_t size() const { return value_.size(); }
    Integer coeff(std::uint32_t index) const { return value_.coeff(index); }
    bool contains(std::uint32_t index) const { return value_.contains(index); }

    friend Chain operator+(const Chain& x, const Chain& y) { return Chain(x.value_ + y.value_); }
    Chain& operator+=(const Chain& y) { return *this = *this + y; }

    friend bool operator==(const Chain& x, const Chain& y) { return x.value_ == y.value_; }

private:
    GroupElement value_;
};

inline GroupElement combine(const GroupElement& x, const GroupElement& y, const Integer& cx, const Integer& cy)
{
    return GroupElement::merge(x, y, [&](const Integer& a, const Integer& b) { return Integer(cx * a + cy * b); });
}

struct Parts {
    Chain pos;
    Chain neg;
};

inline Parts split_parts(const GroupElement& x)
{
    std::vector<Term> pos;
    std::vector<Term> neg;
    for (const auto& [i, c] : x.terms()) {
        if (c > 0)
            pos.emplace_back(i, c);
        else
            neg.emplace_back(i, -c);
    }
    Parts parts;
    if (!pos.empty())
        parts.pos = Chain(GroupElement(x.basis(), std::move(pos)));
    if (!neg.empty())
        parts.neg = Chain(GroupElement(x.basis(), std::move(neg)));
    return parts;
}

inline Chain positive_part(const GroupElement& x) { return split_parts(x).pos; }

inline Chain meet(const Chain& x, const Chain& y)
{
    return Chain(GroupElement::merge(x, y, [](const Integer& a, const Integer& b) { return Integer(a < b ? a : b); }));
}

inline Chain join(const Chain& x, const Chain& y)
{
    return Chain(GroupElement::merge(x, y, [](const Integer& a, const Integer& b) { return Integer(a < b ? b : a); }));
}

inline Chain truncated_diff(const Chain& x, const Chain& y)
{
    return Chain(GroupElement::merge(x, y, [](const Integer& a, const Integer& b) {
        return a > b ? Integer(a - b) : Integer(0);
    }));
}

inline bool leq(const Chain& x, const Chain& y)
{
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const Term& t) { return t.second <= y.coeff(t.first); });
}

inline bool leq_one(const Chain& x)
{
    return std::all_of(x.terms().begin(), x.terms().end(), [](const Term& t) { return t.second <= 1; });
}

inline bool disjoint(const Chain& x, const Chain& y) { return meet(x, y).is_zero(); }

inline std::string to_string(const GroupElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : x.terms()) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.str() + "*";
        out += x.basis()->id(i);
        first = false;
    }
    return out;
}

inline std::string to_string(const Chain& x) { return to_string(x.value()); }

} // namespace steiner

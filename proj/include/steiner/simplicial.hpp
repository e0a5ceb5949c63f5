#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omega.hpp"

namespace steiner {

struct RawSimplex {
    std::string id;
    int dim = 0;
    std::vector<std::optional<std::string>> faces; // d_0 .. d_dim, nullopt when degenerate
    std::vector<int> vertices;                     // optional
};

struct Simplex {
    std::string id;
    int dim = 0;
    std::vector<std::optional<std::uint32_t>> faces;
    std::vector<int> vertices;
};

// Finite simplicial set given by its nondegenerate simplices and face tables.
// Positions agree with the basis of its chain complex.
class SimplicialSet {
public:
    static SimplicialSet make(std::string name, const std::vector<RawSimplex>& raw)
    {
        SimplicialSet s;
        s.name_ = std::move(name);
        std::vector<std::pair<std::string, int>> ids;
        for (const auto& r : raw)
            ids.emplace_back(r.id, r.dim);
        s.basis_ = Basis::make(ids);
        s.simplices_.resize(raw.size());
        for (const auto& r : raw) {
            auto pos = s.basis_->at(r.id);
            Simplex& x = s.simplices_[pos];
            x.id = r.id;
            x.dim = r.dim;
            x.vertices = r.vertices;
            if (r.dim == 0 && !r.faces.empty())
                throw Error(ErrorCode::MalformedInput, "vertex " + r.id + " with faces");
            if (r.dim > 0 && r.faces.size() != static_cast<std::size_t>(r.dim) + 1)
                throw Error(ErrorCode::MalformedInput, "simplex " + r.id + " needs " + std::to_string(r.dim + 1) + " faces");
            for (const auto& f : r.faces) {
                if (!f) {
                    x.faces.push_back(std::nullopt);
                    continue;
                }
                auto fi = s.basis_->at(*f);
                if (s.basis_->dim(fi) != r.dim - 1)
                    throw Error(ErrorCode::GradingViolation, "face " + *f + " of " + r.id);
                x.faces.push_back(fi);
            }
        }
        s.check_identities();
        return s;
    }

    const std::string& name() const { return name_; }
    const BasisPtr& basis() const { return basis_; }
    std::size_t size() const { return simplices_.size(); }
    const Simplex& simplex(std::uint32_t i) const { return simplices_.at(i); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::uint32_t at(const std::string& id) const { return basis_->at(id); }

    // d_j of simplex x; nullopt when degenerate.
    std::optional<std::uint32_t> face(std::uint32_t x, int j) const
    {
        const auto& s = simplices_.at(x);
        if (j < 0 || j > s.dim)
            throw Error(ErrorCode::BadIndex, "face " + std::to_string(j) + " of " + s.id);
        return s.faces[static_cast<std::size_t>(j)];
    }

    // d_{i_1} ... d_{i_k} x for an increasing sequence, innermost (largest) first.
    std::optional<std::uint32_t> iterated_face(std::uint32_t x, const std::vector<int>& seq) const
    {
        std::optional<std::uint32_t> cur = x;
        for (auto it = seq.rbegin(); it != seq.rend() && cur; ++it)
            cur = face(*cur, *it);
        return cur;
    }

private:
    // d_i d_j = d_{j-1} d_i for i < j, whenever both sides are nondegenerate.
    void check_identities() const
    {
        for (std::uint32_t x = 0; x < simplices_.size(); ++x) {
            int n = simplices_[x].dim;
            if (n < 2)
                continue;
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    auto lhs = iterated_face(x, {i, j});
                    auto dj = face(x, j);
                    auto di = face(x, i);
                    std::optional<std::uint32_t> rhs = di ? face(*di, j - 1) : std::nullopt;
                    bool lhs_known = dj.has_value();
                    bool rhs_known = di.has_value();
                    if (lhs_known && rhs_known && lhs != rhs)
                        throw Error(ErrorCode::FaceIdentityViolation,
                                    "d" + std::to_string(i) + "d" + std::to_string(j) + " of " + simplices_[x].id);
                }
        }
    }

    std::string name_;
    BasisPtr basis_;
    std::vector<Simplex> simplices_;
};

inline std::string vertex_id(const std::vector<int>& vertices, int n)
{
    std::string id;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (n > 9 && i)
            id += '.';
        id += std::to_string(vertices[i]);
    }
    return id;
}

enum class Shape { standard, boundary, horn };

struct ComplexKind {
    Shape shape = Shape::standard;
    int n = 0;
    int i = 0;
};

inline SimplicialSet build_complex(const ComplexKind& kind)
{
    const int n = kind.n;
    if (n < 0 || n > 20)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    if (kind.shape == Shape::horn && (kind.i < 0 || kind.i > n))
        throw Error(ErrorCode::BadIndex, "horn index " + std::to_string(kind.i));
    const std::uint32_t full = (std::uint32_t{1} << (n + 1)) - 1;
    auto keep = [&](std::uint32_t mask) {
        if (kind.shape == Shape::standard)
            return true;
        if (mask == full)
            return false;
        return kind.shape == Shape::boundary || mask != (full & ~(std::uint32_t{1} << kind.i));
    };
    auto vertices_of = [&](std::uint32_t mask) {
        std::vector<int> v;
        for (int j = 0; j <= n; ++j)
            if (mask >> j & 1)
                v.push_back(j);
        return v;
    };
    std::vector<RawSimplex> raw;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!keep(mask))
            continue;
        RawSimplex r;
        r.vertices = vertices_of(mask);
        r.id = vertex_id(r.vertices, n);
        r.dim = static_cast<int>(r.vertices.size()) - 1;
        if (r.dim > 0)
            for (std::size_t j = 0; j < r.vertices.size(); ++j) {
                auto face = r.vertices;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                r.faces.emplace_back(vertex_id(face, n));
            }
        raw.push_back(std::move(r));
    }
    std::string name = kind.shape == Shape::standard   ? "standard " + std::to_string(n)
                       : kind.shape == Shape::boundary ? "boundary " + std::to_string(n)
                                                       : "horn " + std::to_string(n) + " " + std::to_string(kind.i);
    return SimplicialSet::make(name, raw);
}

inline SimplicialSet standard_simplex(int n) { return build_complex({Shape::standard, n, 0}); }

struct RegularityReport {
    bool ok = true;
    std::string witness;
};

inline RegularityReport check_regular(const SimplicialSet& s)
{
    RegularityReport report;
    for (std::uint32_t x = 0; x < s.size(); ++x) {
        const int n = s.simplex(x).dim;
        for (int k = 1; k <= n; ++k) {
            std::map<std::uint32_t, std::vector<int>> hit;
            std::vector<int> seq;
            // Enumerate increasing sequences of length k in [0, n].
            auto rec = [&](auto&& self, int next) -> bool {
                if (static_cast<int>(seq.size()) == k) {
                    auto target = s.iterated_face(x, seq);
                    auto describe = [&](const std::vector<int>& q) {
                        std::string out = "d";
                        for (int i : q)
                            out += std::to_string(i) + ",";
                        out.pop_back();
                        return out;
                    };
                    if (!target) {
                        report.ok = false;
                        report.witness = describe(seq) + " of " + s.simplex(x).id + " is degenerate";
                        return false;
                    }
                    auto [it, fresh] = hit.emplace(*target, seq);
                    if (!fresh) {
                        report.ok = false;
                        report.witness = describe(it->second) + " and " + describe(seq) + " of " + s.simplex(x).id +
                                         " both give " + s.simplex(*target).id;
                        return false;
                    }
                    return true;
                }
                for (int i = next; i <= n; ++i) {
                    seq.push_back(i);
                    bool go = self(self, i + 1);
                    seq.pop_back();
                    if (!go)
                        return false;
                }
                return true;
            };
            if (!rec(rec, 0))
                return report;
        }
    }
    return report;
}

inline Adc chains_of(const SimplicialSet& s)
{
    RawAdc raw;
    for (const auto& x : s.simplices()) {
        raw.basis.emplace_back(x.id, x.dim);
        if (x.dim == 0) {
            raw.aug[x.id] = 1;
            continue;
        }
        auto& image = raw.diff[x.id];
        for (int j = 0; j <= x.dim; ++j)
            if (auto f = x.faces[static_cast<std::size_t>(j)])
                image[s.simplex(*f).id] += (j % 2 == 0) ? 1 : -1;
        std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
    }
    return Adc::validate_on(s.basis(), raw);
}

// Word over {i, p}: letter j records the parity of the j-th face index.
using SignatureWord = std::string;

inline SignatureWord alternating_word(char first, int length)
{
    SignatureWord w;
    char other = first == 'i' ? 'p' : 'i';
    for (int j = 0; j < length; ++j)
        w += j % 2 == 0 ? first : other;
    return w;
}

inline Chain d_s(const SimplicialSet& s, std::uint32_t x, const SignatureWord& word)
{
    const int n = s.simplex(x).dim;
    const int len = static_cast<int>(word.size());
    if (len > n)
        throw Error(ErrorCode::WordTooLong, word + " on " + s.simplex(x).id);
    for (char c : word)
        if (c != 'i' && c != 'p')
            throw Error(ErrorCode::MalformedInput, "signature letter " + std::string(1, c));
    std::vector<Term> terms;
    std::vector<int> seq;
    auto rec = [&](auto&& self, int next) -> void {
        auto pos = seq.size();
        if (static_cast<int>(pos) == len) {
            if (auto f = s.iterated_face(x, seq))
                terms.emplace_back(*f, 1);
            return;
        }
        int parity = word[pos] == 'p' ? 0 : 1;
        for (int i = next; i <= n; ++i)
            if (i % 2 == parity) {
                seq.push_back(i);
                self(self, i + 1);
                seq.pop_back();
            }
    };
    rec(rec, 0);
    if (terms.empty())
        return {};
    return Chain(GroupElement(s.basis(), std::move(terms)));
}

inline Chain face_formula(const SimplicialSet& s, std::uint32_t x, int k, Sign sign)
{
    const int n = s.simplex(x).dim;
    if (k < 0 || k > n)
        throw Error(ErrorCode::BadIndex, "level " + std::to_string(k));
    return d_s(s, x, alternating_word(sign == Sign::minus ? 'i' : 'p', n - k));
}

struct Oriental {
    SimplicialSet simplicial;
    Adc complex;
    Cell top;
};

inline Oriental oriental(int n)
{
    if (n < 0)
        throw Error(ErrorCode::BadIndex, "n = " + std::to_string(n));
    SimplicialSet s = standard_simplex(n);
    Adc k = chains_of(s);
    std::vector<int> all;
    for (int j = 0; j <= n; ++j)
        all.push_back(j);
    Cell top{k.singleton(vertex_id(all, n)), n};
    return {std::move(s), std::move(k), std::move(top)};
}

// Id of the simplex of the standard n-simplex with the listed vertices removed.
inline std::string face_id(int n, std::initializer_list<int> removed)
{
    std::vector<int> v;
    for (int j = 0; j <= n; ++j)
        if (std::find(removed.begin(), removed.end(), j) == removed.end())
            v.push_back(j);
    return vertex_id(v, n);
}

} // namespace steiner

#include "aous/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aous {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

std::uint64_t Rng::next_u64() {
    // xorshift over a splitmix-whitened counter: small, portable, bit-stable
    state_ = splitmix64(state_);
    return state_;
}

double Rng::uniform01() {
    double u;
    do {
        u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    } while (u <= 0.0 || u >= 1.0);
    return u;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::size_t Rng::below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next_u64() % n);
}

namespace {

const char* kind_name(RecipeKind k) {
    switch (k) {
        case RecipeKind::RandomHermitian: return "random-hermitian";
        case RecipeKind::RandomPsd: return "random-psd";
        case RecipeKind::UnitInterval: return "unit-interval";
        case RecipeKind::Projection: return "projection";
        case RecipeKind::CommutingPair: return "commuting-pair";
        case RecipeKind::OrthogonalSupportPair: return "orthogonal-support-pair";
        case RecipeKind::BlockCompatible: return "block-compatible";
        case RecipeKind::Diagonal: return "diagonal";
    }
    return "?";
}

RecipeKind kind_from_name(const std::string& s) {
    for (RecipeKind k : {RecipeKind::RandomHermitian, RecipeKind::RandomPsd, RecipeKind::UnitInterval,
                         RecipeKind::Projection, RecipeKind::CommutingPair,
                         RecipeKind::OrthogonalSupportPair, RecipeKind::BlockCompatible,
                         RecipeKind::Diagonal}) {
        if (s == kind_name(k)) return k;
    }
    throw std::invalid_argument("unknown recipe kind: " + s);
}

std::uint64_t recipe_stream_seed(const SampleRecipe& r) {
    std::uint64_t s = derive_seed(r.seed, static_cast<std::uint64_t>(r.kind) + 1);
    s = derive_seed(s, static_cast<std::uint64_t>(r.dim));
    if (r.kind == RecipeKind::Projection || r.kind == RecipeKind::BlockCompatible)
        s = derive_seed(s, static_cast<std::uint64_t>(r.rank));
    return s;
}

void verify(bool ok, const std::string& what) {
    if (!ok) throw RecipeError("sample generation failed its property check: " + what);
}

}  // namespace

SampleRecipe SampleRecipe::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("recipe must be kind:dim:seed[:rank], got: " + text);
    SampleRecipe r;
    r.kind = kind_from_name(parts[0]);
    r.dim = static_cast<std::size_t>(std::stoul(parts[1]));
    r.seed = static_cast<std::uint64_t>(std::stoull(parts[2]));
    if (parts.size() == 4) r.rank = static_cast<std::size_t>(std::stoul(parts[3]));
    if (r.dim == 0) throw std::invalid_argument("recipe dim must be >= 1");
    return r;
}

std::string SampleRecipe::to_string() const {
    std::string s = std::string(kind_name(kind)) + ":" + std::to_string(dim) + ":" + std::to_string(seed);
    if (kind == RecipeKind::Projection || kind == RecipeKind::BlockCompatible)
        s += ":" + std::to_string(rank);
    return s;
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
    std::vector<Complex> a(dim * dim);
    for (auto& z : a) z = Complex{rng.normal(), rng.normal()};
    return HermitianMatrix::symmetrized(dim, a);
}

HermitianMatrix random_psd(std::size_t dim, Rng& rng) {
    const HermitianMatrix g = random_hermitian(dim, rng);
    const ComplexDense gg = mul(g.dense(), g.dense());
    return HermitianMatrix::symmetrized(dim, gg.a);
}

HermitianMatrix random_unit_interval(std::size_t dim, Rng& rng, const ToleranceProfile& tol) {
    const HermitianMatrix h = random_hermitian(dim, rng);
    const auto d = eigh(h, tol);
    const double top = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
    if (top == 0.0) return HermitianMatrix(dim);
    // rescale into [-1, 1] first so the clamp keeps interior spectrum
    return d.assemble([&](double t) { return std::clamp(0.5 + 0.5 * t / top, 0.0, 1.0); });
}

HermitianMatrix random_projection(std::size_t dim, std::size_t rank, Rng& rng,
                                  const ToleranceProfile& tol) {
    if (rank > dim) throw std::invalid_argument("projection rank exceeds dimension");
    const auto d = eigh(random_hermitian(dim, rng), tol);
    std::vector<Complex> out(dim * dim, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                out[i * dim + j] += d.basis.at(i, k) * std::conj(d.basis.at(j, k));
    return HermitianMatrix::symmetrized(dim, out);
}

HermitianMatrix random_diagonal(std::size_t dim, Rng& rng) {
    std::vector<double> d(dim);
    for (auto& x : d) x = rng.normal();
    return HermitianMatrix::diagonal(d);
}

std::pair<HermitianMatrix, HermitianMatrix> commuting_pair(std::size_t dim, Rng& rng,
                                                           const ToleranceProfile& tol) {
    const auto d = eigh(random_hermitian(dim, rng), tol);
    std::vector<double> e1(dim), e2(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e1[i] = rng.uniform01();
        e2[i] = rng.uniform01();
    }
    return {d.assemble_values(e1), d.assemble_values(e2)};
}

std::pair<HermitianMatrix, HermitianMatrix> orthogonal_support_pair(std::size_t dim, Rng& rng,
                                                                    const ToleranceProfile& tol) {
    if (dim < 2) throw std::invalid_argument("orthogonal-support-pair needs dim >= 2");
    const auto d = eigh(random_hermitian(dim, rng), tol);
    // split the eigenbasis into two nonempty groups with positive weights
    const std::size_t cut = 1 + rng.below(dim - 1);
    std::vector<double> wa(dim, 0.0), wb(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        const double w = rng.uniform(0.2, 1.5);
        (i < cut ? wa : wb)[i] = w;
    }
    std::size_t ka = 0, kb = 0;
    const HermitianMatrix a = d.assemble([&](double) { return wa[ka++]; });
    const HermitianMatrix b = d.assemble([&](double) { return wb[kb++]; });
    return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> block_compatible(std::size_t dim, std::size_t rank,
                                                             Rng& rng, const ToleranceProfile& tol) {
    if (rank > dim) throw std::invalid_argument("block-compatible rank exceeds dimension");
    const HermitianMatrix p = random_projection(dim, rank, rng, tol);
    const HermitianMatrix pc = HermitianMatrix::identity(dim) - p;
    const HermitianMatrix v = compress(p, random_hermitian(dim, rng)) +
                              compress(pc, random_hermitian(dim, rng));
    return {v, p};
}

HermitianMatrix random_contraction(std::size_t dim, Rng& rng, double floor,
                                   const ToleranceProfile& tol) {
    const HermitianMatrix h = random_unit_interval(dim, rng, tol);
    return apply_function(h, [&](double t) { return std::clamp(t, floor, 1.0); }, tol);
}

HermitianMatrix sub_element(const HermitianMatrix& u, Rng& rng, const ToleranceProfile& tol) {
    const HermitianMatrix root = apply_function(
        u, [](double t) { return std::sqrt(std::max(t, 0.0)); }, tol);
    const HermitianMatrix w = random_contraction(u.dim(), rng, 0.05, tol);
    const ComplexDense c = mul(mul(root.dense(), w.dense()), root.dense());
    return HermitianMatrix::symmetrized(u.dim(), c.a);
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<Complex> out(n * n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out[i * n + j] = a(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out[(a.dim() + i) * n + (a.dim() + j)] = b(i, j);
    return HermitianMatrix::symmetrized(n, out);
}

HermitianMatrix diagonal_embed(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("diagonal_embed: empty value list");
    return HermitianMatrix::diagonal(values);
}

Sample generate(const SampleRecipe& recipe, const ToleranceProfile& tol) {
    if (recipe.dim == 0) throw std::invalid_argument("recipe dim must be >= 1");
    Rng rng(recipe_stream_seed(recipe));
    Sample s;
    switch (recipe.kind) {
        case RecipeKind::RandomHermitian:
            s.first = random_hermitian(recipe.dim, rng);
            break;
        case RecipeKind::RandomPsd:
            s.first = random_psd(recipe.dim, rng);
            verify(is_psd(s.first, tol).psd, "random-psd is PSD");
            break;
        case RecipeKind::UnitInterval:
            s.first = random_unit_interval(recipe.dim, rng, tol);
            verify(is_psd(s.first, tol).psd, "unit-interval lower bound");
            verify(leq(s.first, HermitianMatrix::identity(recipe.dim), tol), "unit-interval upper bound");
            break;
        case RecipeKind::Projection: {
            s.first = random_projection(recipe.dim, recipe.rank, rng, tol);
            const ComplexDense pp = mul(s.first.dense(), s.first.dense());
            HermitianMatrix sq = HermitianMatrix::symmetrized(recipe.dim, pp.a);
            verify((sq - s.first).frobenius() <= 1e-10 * std::max(1.0, s.first.frobenius()),
                   "projection idempotency");
            break;
        }
        case RecipeKind::CommutingPair: {
            auto [a, b] = commuting_pair(recipe.dim, rng, tol);
            verify(commutator_norm(a, b, tol) <= 1e-10, "commuting pair commutator");
            s.first = a;
            s.second = b;
            break;
        }
        case RecipeKind::OrthogonalSupportPair: {
            auto [a, b] = orthogonal_support_pair(recipe.dim, rng, tol);
            verify(product_norm(a, b, tol) <= 1e-10 * std::max(1.0, operator_norm(a, tol) * operator_norm(b, tol)),
                   "orthogonal-support product");
            verify(!a.is_zero(1e-12) && !b.is_zero(1e-12), "orthogonal-support nonzero parts");
            s.first = a;
            s.second = b;
            break;
        }
        case RecipeKind::BlockCompatible: {
            auto [v, p] = block_compatible(recipe.dim, recipe.rank, rng, tol);
            const HermitianMatrix pc = HermitianMatrix::identity(recipe.dim) - p;
            const HermitianMatrix rebuilt = compress(p, v) + compress(pc, v);
            verify((rebuilt - v).frobenius() <= 1e-9 * std::max(1.0, v.frobenius()),
                   "block-compatible decomposition");
            s.first = v;
            s.second = p;
            break;
        }
        case RecipeKind::Diagonal:
            s.first = random_diagonal(recipe.dim, rng);
            break;
    }
    return s;
}

}  // namespace aous

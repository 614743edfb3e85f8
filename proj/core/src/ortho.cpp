#include "msrcert/ortho.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "msrcert/errors.hpp"

namespace msrcert {

namespace {

constexpr int kAllNonzeroAttempts = 8; // soft preference window

RationalVector sample_step(const std::vector<RationalVector>& vectors_by_position,
                           const std::vector<int>& orthogonal_to,
                           const std::vector<int>& nonzero_with,
                           int dimension,
                           int position,
                           Rng& rng,
                           int retry_limit) {
    // Exact nullspace of the (at most two) orthogonality constraints.
    std::vector<RationalVector> basis;
    if (orthogonal_to.empty()) {
        for (int i = 0; i < dimension; ++i) {
            RationalVector e(static_cast<std::size_t>(dimension), Rational(0));
            e[static_cast<std::size_t>(i)] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        RationalMatrix constraints(static_cast<int>(orthogonal_to.size()), dimension);
        for (std::size_t r = 0; r < orthogonal_to.size(); ++r) {
            const RationalVector& row = vectors_by_position[static_cast<std::size_t>(orthogonal_to[r])];
            for (int c = 0; c < dimension; ++c)
                constraints.at(static_cast<int>(r), c) = row[static_cast<std::size_t>(c)];
        }
        basis = nullspace_basis(std::move(constraints));
    }
    if (basis.empty())
        throw BuildError("no nullspace left at position " + std::to_string(position),
                         position, static_cast<int>(orthogonal_to.size()), 0);

    std::int64_t radius = 8;
    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        RationalVector w(static_cast<std::size_t>(dimension), Rational(0));
        for (const RationalVector& b : basis) {
            std::int64_t coeff = rng.range(-radius, radius);
            if (coeff == 0) continue;
            Rational c(static_cast<long>(coeff));
            for (int i = 0; i < dimension; ++i) w[static_cast<std::size_t>(i)] += c * b[static_cast<std::size_t>(i)];
        }
        if (radius < (std::int64_t(1) << 40)) radius *= 2;
        if (is_zero_vector(w)) continue;
        scale_to_primitive(w);

        if (attempt < kAllNonzeroAttempts &&
            std::any_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; }))
            continue;

        bool ok = true;
        for (int q : nonzero_with) {
            if (inner_product(w, vectors_by_position[static_cast<std::size_t>(q)]) == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (int p = 0; p < position && ok; ++p)
            if (scalar_multiples(w, vectors_by_position[static_cast<std::size_t>(p)])) ok = false;
        if (ok) return w;
    }
    throw BuildError("exhausted " + std::to_string(retry_limit) + " retries at position " +
                         std::to_string(position) + " (" +
                         std::to_string(orthogonal_to.size()) + " orthogonality constraints, dim " +
                         std::to_string(dimension) + ")",
                     position, static_cast<int>(orthogonal_to.size()), retry_limit);
}

} // namespace

RationalVector extend_vector(const Graph& g,
                             const ConstructionOrdering& ordering,
                             const std::vector<RationalVector>& vectors_by_position,
                             int position,
                             int dimension,
                             Rng& rng,
                             int retry_limit) {
    if (position < 0 || position >= static_cast<int>(ordering.order.size()))
        throw PreconditionError("extend_vector: position out of range");
    if (static_cast<int>(vectors_by_position.size()) < position)
        throw PreconditionError("extend_vector: earlier positions not yet assigned");

    // Earlier neighbors in g are non-edges of the complement: orthogonality.
    // Every other earlier vertex is a complement edge: nonzero product.
    std::vector<int> orthogonal_to;
    std::vector<int> nonzero_with;
    const int vertex = ordering.order[static_cast<std::size_t>(position)];
    for (int p = 0; p < position; ++p) {
        if (g.adjacent(vertex, ordering.order[static_cast<std::size_t>(p)]))
            orthogonal_to.push_back(p);
        else
            nonzero_with.push_back(p);
    }
    if (orthogonal_to.size() > 2 && position >= 3)
        throw PreconditionError("extend_vector: position " + std::to_string(position) +
                                " has more than two prior neighbors");
    return sample_step(vectors_by_position, orthogonal_to, nonzero_with, dimension, position, rng,
                       retry_limit);
}

std::array<RationalVector, 3> base_vectors(const Graph& g,
                                           const ConstructionOrdering& ordering,
                                           int dimension,
                                           Rng& rng) {
    if (ordering.order.size() < 3)
        throw PreconditionError("base vectors need at least three ordered vertices");
    if (dimension < 3) throw PreconditionError("base vectors need dimension >= 3");
    int e = int(g.adjacent(ordering.order[0], ordering.order[1])) +
            int(g.adjacent(ordering.order[1], ordering.order[2])) +
            int(g.adjacent(ordering.order[0], ordering.order[2]));
    if (e < 2) throw PreconditionError("starting triple must induce P_3 or K_3");

    std::vector<RationalVector> vectors;
    for (int m = 0; m < 3; ++m)
        vectors.push_back(extend_vector(g, ordering, vectors, m, dimension, rng));
    return {vectors[0], vectors[1], vectors[2]};
}

namespace {

ConstructionOrdering trivial_ordering(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return ordering_from_permutation(g, order);
}

int auto_dimension(CactusClass cls) {
    switch (cls) {
        case CactusClass::tree: return 3;
        case CactusClass::unicyclic: return 4;
        case CactusClass::multicyclic: return 5;
    }
    return 5;
}

} // namespace

BuildOutcome build_representation(const Graph& g, const BuildOptions& options) {
    const int n = g.order();
    if (n == 0) throw PreconditionError("cannot represent the empty graph");
    if (options.dimension && (*options.dimension < 1 || *options.dimension > 16))
        throw PreconditionError("dimension must lie in [1, 16]");

    ConstructionOrdering ordering;
    std::optional<CactusClass> cls;
    if (options.ordering) {
        ordering = *options.ordering;
        if (n >= 3) {
            OrderingValidation check = validate_ordering(g, ordering);
            if (!check.ok)
                throw PreconditionError("supplied ordering is invalid: " + check.violations.front());
        }
    } else if (n < 3) {
        ordering = trivial_ordering(g);
        cls = CactusClass::tree; // K_1 and K_2 are trees
    } else {
        CactusProfile profile = recognize_cactus(g);
        if (!profile.is_cactus)
            throw NotCactusError("input is not a cactus; pass an explicit ordering instead");
        ordering = find_construction_ordering(g, profile);
        cls = profile.cls;
    }

    int requested = options.dimension ? *options.dimension
                                      : auto_dimension(cls ? *cls : CactusClass::multicyclic);
    std::vector<int> dims{requested};
    if (!options.dimension && options.allow_fallback && requested < 5) dims.push_back(5);

    BuildOutcome outcome;
    outcome.diagnostics.dimension_requested = requested;
    outcome.diagnostics.seed = options.seed;

    for (std::size_t d_idx = 0; d_idx < dims.size(); ++d_idx) {
        const int dim = dims[d_idx];
        for (int restart = 0; restart <= options.build_restart_limit; ++restart) {
            Rng rng(Rng::mix(options.seed, (static_cast<std::uint64_t>(dim) << 32) |
                                               static_cast<std::uint64_t>(restart)));
            try {
                std::vector<RationalVector> vectors_by_position;
                vectors_by_position.reserve(static_cast<std::size_t>(n));
                for (int m = 0; m < n; ++m)
                    vectors_by_position.push_back(extend_vector(
                        g, ordering, vectors_by_position, m, dim, rng, options.vertex_retry_limit));

                OrthoRepresentation rep;
                rep.target = complement(g);
                rep.dim = dim;
                rep.ordering = ordering;
                rep.vectors.assign(static_cast<std::size_t>(n), RationalVector{});
                for (int m = 0; m < n; ++m)
                    rep.vectors[static_cast<std::size_t>(ordering.order[static_cast<std::size_t>(m)])] =
                        std::move(vectors_by_position[static_cast<std::size_t>(m)]);

                outcome.representation = std::move(rep);
                outcome.diagnostics.dimension_used = dim;
                outcome.diagnostics.fallback_used = d_idx > 0;
                outcome.diagnostics.restarts = restart;
                return outcome;
            } catch (const BuildError&) {
                if (restart == options.build_restart_limit && d_idx + 1 == dims.size()) throw;
            }
        }
    }
    throw BuildError("unreachable: all dimensions exhausted", -1, 0, 0);
}

std::string representation_to_json(const OrthoRepresentation& rep) {
    nlohmann::ordered_json j;
    j["dim"] = rep.dim;
    auto vectors = nlohmann::ordered_json::array();
    for (const RationalVector& v : rep.vectors) {
        auto coords = nlohmann::ordered_json::array();
        for (const Rational& x : v) coords.push_back(format_rational(x));
        vectors.push_back(std::move(coords));
    }
    j["vectors"] = std::move(vectors);
    j["ordering"] = rep.ordering.order;
    return j.dump();
}

OrthoRepresentation representation_from_json(std::string_view text, const Graph& g) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("representation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors") || !j.contains("ordering"))
        throw InputError("representation JSON: expected {dim, vectors, ordering}");

    OrthoRepresentation rep;
    rep.dim = j["dim"].get<int>();
    rep.target = complement(g);
    for (const auto& coords : j["vectors"]) {
        RationalVector v;
        for (const auto& s : coords) v.push_back(parse_rational(s.get<std::string>()));
        rep.vectors.push_back(std::move(v));
    }
    if (static_cast<int>(rep.vectors.size()) != g.order())
        throw InputError("representation JSON: vector count differs from vertex count");
    std::vector<int> order = j["ordering"].get<std::vector<int>>();
    rep.ordering = ordering_from_permutation(g, order);
    return rep;
}

} // namespace msrcert

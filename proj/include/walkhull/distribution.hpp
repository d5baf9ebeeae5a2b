#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "walkhull/rng.hpp"
#include "walkhull/vec2.hpp"

namespace walkhull {

/// Analytic first and second moments of an increment law. When the drift is
/// zero there is no drift direction: mu_hat/mu_perp_hat are absent and the
/// variance split defaults to (sigma_mu2, sigma_perp2) = (0, sigma2).
struct DriftStats {
    Vec2 mu;
    double mu_norm = 0.0;
    double sigma2 = 0.0;
    double sigma_mu2 = 0.0;
    double sigma_perp2 = 0.0;
    std::optional<Vec2> mu_hat;
    std::optional<Vec2> mu_perp_hat;

    bool has_drift() const { return mu_hat.has_value(); }
};

struct FiniteAtom {
    Vec2 z;
    double prob;
};

/// Increment law of the walk. Four variants:
///  - finite support (explicit atoms),
///  - isotropic Gaussian with a mean shift (per-coordinate sd),
///  - simple lattice walk, uniform on {+-e1, +-e2},
///  - degenerate diagonal, Z = (1,1) or (1,-1) with probability 1/2 each.
class IncrementDistribution {
public:
    struct Finite {
        std::vector<FiniteAtom> atoms;
        std::vector<double> cumulative;
    };
    struct Gaussian {
        Vec2 mu;
        double sd;
    };
    struct Lattice {};
    struct DegenerateDiag {};

    static IncrementDistribution finite(std::vector<FiniteAtom> atoms) {
        if (atoms.empty()) throw std::invalid_argument("finite distribution: no atoms");
        double total = 0.0;
        for (const auto& a : atoms) {
            if (!is_finite(a.z)) throw std::invalid_argument("finite distribution: non-finite atom");
            if (!(a.prob > 0.0)) throw std::invalid_argument("finite distribution: probabilities must be positive");
            total += a.prob;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("finite distribution: probabilities must sum to 1");
        Finite f{std::move(atoms), {}};
        f.cumulative.reserve(f.atoms.size());
        double run = 0.0;
        for (const auto& a : f.atoms) f.cumulative.push_back(run += a.prob);
        f.cumulative.back() = 1.0;
        return IncrementDistribution(std::move(f));
    }

    static IncrementDistribution gaussian(Vec2 mu, double sd) {
        if (!is_finite(mu) || !(sd > 0.0))
            throw std::invalid_argument("gaussian distribution: need finite mu and sd > 0");
        return IncrementDistribution(Gaussian{mu, sd});
    }

    static IncrementDistribution lattice() { return IncrementDistribution(Lattice{}); }
    static IncrementDistribution degenerate_diag() { return IncrementDistribution(DegenerateDiag{}); }

    std::string type_name() const {
        switch (kind_.index()) {
            case 0: return "finite";
            case 1: return "gaussian";
            case 2: return "lattice";
            default: return "degenerate_diag";
        }
    }

    Vec2 sample(RandomStream& rng) const {
        switch (kind_.index()) {
            case 0: {
                const auto& f = std::get<Finite>(kind_);
                const double u = rng.next_unit();
                std::size_t i = 0;
                while (i + 1 < f.cumulative.size() && u >= f.cumulative[i]) ++i;
                return f.atoms[i].z;
            }
            case 1: {
                const auto& g = std::get<Gaussian>(kind_);
                const Vec2 z = rng.next_gaussian_pair();
                return {g.mu.x + g.sd * z.x, g.mu.y + g.sd * z.y};
            }
            case 2:
                switch (rng.next_u64() >> 62) {
                    case 0: return {1.0, 0.0};
                    case 1: return {-1.0, 0.0};
                    case 2: return {0.0, 1.0};
                    default: return {0.0, -1.0};
                }
            default:
                return (rng.next_u64() >> 63) ? Vec2{1.0, -1.0} : Vec2{1.0, 1.0};
        }
    }

    DriftStats moments() const {
        DriftStats s;
        switch (kind_.index()) {
            case 0: {
                const auto& f = std::get<Finite>(kind_);
                Vec2 mu{0.0, 0.0};
                for (const auto& a : f.atoms) mu += a.z * a.prob;
                s.mu = mu;
                for (const auto& a : f.atoms) s.sigma2 += a.prob * (a.z - mu).norm2();
                break;
            }
            case 1: {
                const auto& g = std::get<Gaussian>(kind_);
                s.mu = g.mu;
                s.sigma2 = 2.0 * g.sd * g.sd;
                break;
            }
            case 2:
                s.mu = {0.0, 0.0};
                s.sigma2 = 1.0;
                break;
            default:
                s.mu = {1.0, 0.0};
                s.sigma2 = 1.0;
                break;
        }
        s.mu_norm = s.mu.norm();
        if (s.mu_norm > 0.0) {
            const Vec2 mu_hat = s.mu / s.mu_norm;
            s.mu_hat = mu_hat;
            s.mu_perp_hat = perp(mu_hat);
            if (kind_.index() == 0) {
                const auto& f = std::get<Finite>(kind_);
                for (const auto& a : f.atoms) {
                    const double along = dot(a.z - s.mu, mu_hat);
                    s.sigma_mu2 += a.prob * along * along;
                }
            } else if (kind_.index() == 1) {
                s.sigma_mu2 = std::get<Gaussian>(kind_).sd * std::get<Gaussian>(kind_).sd;
            } else if (kind_.index() == 3) {
                s.sigma_mu2 = 0.0; // increments project to exactly 1 on mu_hat
            }
            s.sigma_perp2 = s.sigma2 - s.sigma_mu2;
        } else {
            s.sigma_mu2 = 0.0;
            s.sigma_perp2 = s.sigma2;
        }
        return s;
    }

    const Finite* as_finite() const { return std::get_if<Finite>(&kind_); }
    const Gaussian* as_gaussian() const { return std::get_if<Gaussian>(&kind_); }
    bool is_lattice() const { return std::holds_alternative<Lattice>(kind_); }
    bool is_degenerate_diag() const { return std::holds_alternative<DegenerateDiag>(kind_); }

private:
    using Kind = std::variant<Finite, Gaussian, Lattice, DegenerateDiag>;
    explicit IncrementDistribution(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

} // namespace walkhull
